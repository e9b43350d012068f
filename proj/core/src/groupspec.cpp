#include "centra/groupspec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "centra/constructors.hpp"
#include "centra/error.hpp"
#include "centra/field.hpp"
#include "centra/group_ops.hpp"
#include "centra/json_io.hpp"
#include "centra/number_theory.hpp"
#include "centra/presentation.hpp"

namespace centra {

  using nlohmann::json;

  namespace {
    std::size_t to_size(std::string_view s, std::string_view spec) {
      std::size_t v = 0;
      while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
      }
      while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("bad number '" + std::string(s) + "' in group spec '" + std::string(spec)
                         + "'");
      }
      return v;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      int                           depth = 0;
      std::size_t                   start = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        char const c = s[i];
        if (c == '{' || c == '[' || c == '(') {
          ++depth;
        } else if (c == '}' || c == ']' || c == ')') {
          --depth;
        } else if (c == sep && depth == 0) {
          out.push_back(s.substr(start, i - start));
          start = i + 1;
        }
      }
      out.push_back(s.substr(start));
      return out;
    }

    std::filesystem::path resolve_path(std::string_view at, SpecContext const& ctx) {
      std::filesystem::path p{std::string(at)};
      if (p.is_absolute()) {
        return p;
      }
      auto primary = ctx.base_dir / p;
      if (!ctx.fallback_dir.empty() && !std::filesystem::exists(primary)
          && std::filesystem::exists(ctx.fallback_dir / p)) {
        return ctx.fallback_dir / p;
      }
      return primary;
    }

    std::string read_text(std::filesystem::path const& p) {
      std::ifstream in(p);
      if (!in) {
        throw UsageError("cannot open " + p.string());
      }
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    json json_arg(std::string_view arg, SpecContext const& ctx, SpecContext& nested) {
      nested = ctx;
      if (arg.starts_with("@")) {
        auto path       = resolve_path(arg.substr(1), ctx);
        nested.base_dir = path.parent_path();
        return read_json_file(path);
      }
      try {
        return json::parse(arg);
      } catch (json::parse_error const& e) {
        throw UsageError(std::string("bad inline JSON: ") + e.what());
      }
    }

    ResolvedGroup presentation_group(std::string_view text,
                                     std::string_view suffix,
                                     std::optional<std::size_t> default_hint,
                                     SpecContext const& ctx,
                                     std::string_view spec) {
      auto             P      = parse_presentation(text);
      ConventionChoice choice = ConventionChoice::automatic;
      auto             hint   = default_hint;
      if (suffix == "A") {
        choice = ConventionChoice::A;
      } else if (suffix == "B") {
        choice = ConventionChoice::B;
      } else if (suffix.starts_with("auto")) {
        auto rest = suffix.substr(4);
        if (rest.starts_with(":")) {
          hint = to_size(rest.substr(1), spec);
        } else if (!rest.empty()) {
          throw UsageError("bad presentation suffix in '" + std::string(spec) + "'");
        }
      } else if (!suffix.empty()) {
        throw UsageError("bad presentation suffix in '" + std::string(spec) + "'");
      }
      ResolvedGroup r;
      r.realization = realize(P, choice, hint, ctx.coset);
      r.group       = r.realization->group;
      return r;
    }

    GroupPtr witness_group(ExclusionWitness const& w, SpecContext const& ctx) {
      return close_generators(w.generators, ctx.closure);
    }
  }  // namespace

  ActionSpec action_from_json(json const& j, SpecContext const& ctx) {
    if (!j.is_object() || !j.contains("acting") || !j.contains("target")) {
      throw UsageError("action JSON needs \"acting\" and \"target\"");
    }
    auto H = build_group(j.at("acting").get<std::string>(), ctx);
    auto N = build_group(j.at("target").get<std::string>(), ctx);
    std::size_t const         ngens = H->generators().size();
    std::vector<ElemMap>      images(ngens);
    ElemMap                   identity(N->order());
    for (Elem n = 0; n < N->order(); ++n) {
      identity[n] = n;
    }
    for (auto& im : images) {
      im = identity;
    }
    auto gen_index = [&](std::string const& key) {
      std::size_t const i = to_size(key, "action");
      if (i >= ngens) {
        throw UsageError("action JSON: generator index " + key + " out of range");
      }
      return i;
    };
    if (j.contains("images")) {
      for (auto const& [key, val] : j.at("images").items()) {
        ElemMap map = val.get<ElemMap>();
        if (map.size() != N->order()) {
          throw UsageError("action JSON: image of generator " + key + " has wrong length");
        }
        images[gen_index(key)] = std::move(map);
      }
    }
    if (j.contains("power_images")) {
      for (auto const& [key, val] : j.at("power_images").items()) {
        auto const exps        = val.get<std::vector<std::int64_t>>();
        images[gen_index(key)] = power_automorphism(*N, exps);
      }
    }
    return ActionSpec(H, N, std::move(images));
  }

  ResolvedGroup resolve_group_spec(std::string_view spec, SpecContext const& ctx) {
    auto const colon = spec.find(':');
    if (colon == std::string_view::npos) {
      throw UsageError("group spec '" + std::string(spec) + "' lacks a family prefix");
    }
    std::string_view const family = spec.substr(0, colon);
    std::string_view const arg    = spec.substr(colon + 1);
    auto const&            opts   = ctx.closure;

    ResolvedGroup r;
    if (family == "cyclic") {
      r.group = cyclic(to_size(arg, spec), opts);
    } else if (family == "abelian") {
      std::vector<std::size_t> f;
      for (auto part : split(arg, ',')) {
        f.push_back(to_size(part, spec));
      }
      r.group = abelian(f, opts);
    } else if (family == "dihedral") {
      r.group = dihedral(to_size(arg, spec), opts);
    } else if (family == "sd") {
      r.group = semidihedral(to_size(arg, spec), opts);
    } else if (family == "q") {
      r.group = generalized_quaternion(to_size(arg, spec), opts);
    } else if (family == "xsp") {
      auto parts = split(arg, ',');
      if (parts.size() != 2 || (parts[1] != "p" && parts[1] != "p2")) {
        throw UsageError("xsp spec must be xsp:<p>,p or xsp:<p>,p2");
      }
      r.group = extraspecial_p3(static_cast<std::uint32_t>(to_size(parts[0], spec)),
                                parts[1] == "p" ? Exponent::p : Exponent::p_squared,
                                opts);
    } else if (family == "sym") {
      r.group = symmetric(to_size(arg, spec), opts);
    } else if (family == "alt") {
      r.group = alternating(to_size(arg, spec), opts);
    } else if (family == "psl2") {
      std::size_t const q = to_size(arg, spec);
      auto const        f = factorize(q);
      if (f.size() != 1) {
        throw UsageError("psl2: " + std::to_string(q) + " is not a prime power");
      }
      r.group = psl2(gf(static_cast<std::uint32_t>(f[0].first), f[0].second), opts);
    } else if (family == "psl3") {
      r.group = psl3(static_cast<std::uint32_t>(to_size(arg, spec)), opts);
    } else if (family == "sdp") {
      SpecContext nested;
      auto        j = json_arg(arg, ctx, nested);
      r.action      = action_from_json(j, nested);
      r.group       = semidirect(*r.action, opts);
    } else if (family == "presentation" || family == "pres") {
      auto const             hash   = arg.find('#');
      std::string_view const target = arg.substr(0, hash);
      std::string_view const suffix
          = hash == std::string_view::npos ? std::string_view{} : arg.substr(hash + 1);
      if (family == "pres") {
        auto const& entry = find_presentation(target);
        r = presentation_group(entry.text, suffix, entry.expected_order, ctx, spec);
      } else {
        if (!target.starts_with("@")) {
          throw UsageError("presentation spec needs @file");
        }
        auto const text = read_text(resolve_path(target.substr(1), ctx));
        r = presentation_group(text, suffix, std::nullopt, ctx, spec);
      }
    } else if (family == "perms") {
      std::vector<Perm> gens;
      for (auto part : split(arg, ';')) {
        gens.push_back(Perm::from_cycles(part));
      }
      std::size_t d = 1;
      for (auto const& g : gens) {
        d = std::max(d, g.degree());
      }
      for (auto& g : gens) {
        g = extend_degree(g, d);
      }
      r.group = close_generators(std::move(gens), opts);
    } else if (family == "group") {
      SpecContext nested;
      r.group = group_from_json(json_arg(arg, ctx, nested), opts);
    } else if (family == "dp") {
      auto parts = split(arg, '+');
      if (parts.size() < 2) {
        throw UsageError("dp spec needs at least two factors joined by '+'");
      }
      GroupPtr acc = build_group(parts[0], ctx);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = direct_product(*acc, *build_group(parts[i], ctx));
      }
      r.group = acc;
    } else if (family == "witness") {
      if (arg.starts_with("@")) {
        SpecContext nested;
        r.witness = witness_from_json(json_arg(arg, ctx, nested));
      } else {
        r.witness = find_witness(arg);
      }
      r.group = witness_group(*r.witness, ctx);
    } else {
      throw UsageError("unknown group family '" + std::string(family) + "'");
    }
    r.spec = std::string(spec);
    return r;
  }

}  // namespace centra
