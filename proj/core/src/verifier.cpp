#include "centra/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <thread>

#include "centra/classify.hpp"
#include "centra/error.hpp"
#include "centra/group_ops.hpp"
#include "centra/groupspec.hpp"
#include "centra/json_io.hpp"
#include "centra/lattice.hpp"
#include "centra/number_theory.hpp"

#ifndef CENTRA_DATA_DIR
#define CENTRA_DATA_DIR "data"
#endif

namespace centra {

  using nlohmann::json;

  std::filesystem::path VerifyOptions::default_data_dir() {
    return CENTRA_DATA_DIR;
  }

  std::vector<std::string> const& theorem_ids() {
    static std::vector<std::string> const ids{
        "class-C-finite",  "lemma-family",     "t-abelian",       "t-finitep",
        "p-dihedral",      "t-finitesimple",   "t-ncsupersoluble", "t-csupersoluble",
        "examples",        "exclusion-witnesses", "psl2-normalizer"};
    return ids;
  }

  namespace {
    std::string pad(std::size_t n, int width = 4) {
      std::string s = std::to_string(n);
      return std::string(s.size() < std::size_t(width) ? width - s.size() : 0, '0') + s;
    }

    std::string sdp_spec(std::string const& acting,
                         std::string const& target,
                         std::map<std::size_t, std::vector<std::int64_t>> const& powers) {
      json j;
      j["acting"] = acting;
      j["target"] = target;
      json p      = json::object();
      for (auto const& [g, e] : powers) {
        p[std::to_string(g)] = e;
      }
      j["power_images"] = p;
      return "sdp:" + j.dump();
    }

    //! Least unit mod m of multiplicative order exactly d.
    std::int64_t unit_of_order(std::uint64_t d, std::uint64_t m) {
      for (std::uint64_t u = 1; u < m; ++u) {
        std::uint64_t x = u % m;
        std::uint64_t k = 1;
        while (x != 1 && k <= m) {
          x = x * u % m;
          ++k;
        }
        if (x == 1 && k == d) {
          return static_cast<std::int64_t>(u);
        }
      }
      throw std::logic_error("no unit of the requested order");
    }

    TheoremInstance make(std::string theorem, std::string label, std::string spec, json expect,
                         std::string note = {}) {
      TheoremInstance t;
      t.id      = theorem + "/" + label;
      t.theorem = std::move(theorem);
      t.spec    = std::move(spec);
      t.expect  = std::move(expect);
      t.note    = std::move(note);
      return t;
    }

    std::string q8_on_c3() {
      // Q8 = <a, b>; a acts trivially, b inverts, so the kernel is <a> of order 4.
      return sdp_spec("q:8", "cyclic:3", {{1, {2}}});
    }

    std::vector<TheoremInstance> sweep_class_c() {
      std::vector<TheoremInstance> out;
      std::size_t                  k = 0;
      for (auto const& c : corpus()) {
        ++k;
        if (c.order == 1) {
          continue;
        }
        out.push_back(make("class-C-finite",
                           pad(k, 3),
                           c.spec,
                           {{"order", c.order},
                            {"member_c", class_c_prediction(c.order, c.abelian, c.cyclic)}}));
      }
      return out;
    }

    std::vector<TheoremInstance> sweep_lemma_family() {
      return {
          make("lemma-family", "alt5", "alt:5", {{"lemma_agree", true}, {"family_in_X", true}}),
          make("lemma-family",
               "dihedral32",
               "dihedral:32",
               {{"lemma_agree", true}, {"family_in_X", true}}),
          make("lemma-family",
               "dihedral24",
               "dihedral:24",
               {{"lemma_agree", true}, {"family_in_X", false}},
               "non-member family: 24 = 2 * 12 with 12 neither odd nor a power of 2"),
      };
    }

    //! Ascending divisibility chains with product n.
    void chains(std::size_t n, std::size_t first, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
      if (n == 1) {
        out.push_back(cur);
        return;
      }
      for (std::size_t d = 2; d <= n; ++d) {
        if (n % d != 0 || (first != 0 && d % first != 0)) {
          continue;
        }
        // the remaining factors must all be multiples of d
        std::size_t const rest = n / d;
        if (rest != 1 && rest % d != 0) {
          continue;
        }
        cur.push_back(d);
        chains(rest, d, cur, out);
        cur.pop_back();
      }
    }

    std::vector<TheoremInstance> sweep_abelian() {
      std::vector<TheoremInstance> out;
      for (std::size_t n = 1; n <= 100; ++n) {
        std::vector<std::vector<std::size_t>> all;
        std::vector<std::size_t>              cur;
        chains(n, 0, cur, all);
        for (auto const& f : all) {
          bool const  is_cyclic = f.size() <= 1;
          bool const  cp_cp     = f.size() == 2 && f[0] == f[1] && is_prime(f[0]);
          std::string spec;
          std::string label = pad(n, 3);
          if (is_cyclic) {
            spec = "cyclic:" + std::to_string(n);
            label += "-cyclic";
          } else {
            spec = "abelian:";
            for (std::size_t i = 0; i < f.size(); ++i) {
              spec += (i ? "," : "") + std::to_string(f[i]);
              label += "-" + std::to_string(f[i]);
            }
          }
          out.push_back(make("t-abelian", label, spec, {{"member", is_cyclic || cp_cp}}));
        }
      }
      return out;
    }

    std::vector<TheoremInstance> sweep_dihedral() {
      std::vector<TheoremInstance> out;
      for (std::size_t n = 2; n <= 64; ++n) {
        bool const member = (n % 2 == 1) || is_power_of_two(n);
        out.push_back(make("p-dihedral",
                           "n" + pad(n, 2),
                           "dihedral:" + std::to_string(2 * n),
                           {{"member", member}}));
      }
      return out;
    }

    std::vector<TheoremInstance> sweep_finitep() {
      std::vector<TheoremInstance> out;
      for (std::size_t o : {8, 16, 32, 64}) {
        out.push_back(make("t-finitep",
                           "dihedral-" + pad(o, 2),
                           "dihedral:" + std::to_string(o),
                           {{"member", true}, {"two_group_family", "dihedral"}}));
        out.push_back(make("t-finitep",
                           "quaternion-" + pad(o, 2),
                           "q:" + std::to_string(o),
                           {{"member", true}, {"two_group_family", "quaternion"}}));
        if (o >= 16) {
          out.push_back(make("t-finitep",
                             "semidihedral-" + pad(o, 2),
                             "sd:" + std::to_string(o),
                             {{"member", true}, {"two_group_family", "semidihedral"}}));
        }
      }
      for (std::size_t p : {3, 5, 7}) {
        for (std::string e : {"p", "p2"}) {
          out.push_back(make("t-finitep",
                             "xsp-" + std::to_string(p) + "-" + e,
                             "xsp:" + std::to_string(p) + "," + e,
                             {{"member", true}, {"order", p * p * p}}));
        }
      }
      out.push_back(make("t-finitep",
                         "non-d8xc2",
                         "dp:dihedral:8+cyclic:2",
                         {{"member", false}, {"two_group_family", "other"}}));
      out.push_back(make("t-finitep",
                         "non-q8xc2",
                         "dp:q:8+cyclic:2",
                         {{"member", false}, {"two_group_family", "other"}}));
      out.push_back(make("t-finitep", "non-c3xc9", "abelian:3,9", {{"member", false}}));
      out.push_back(make("t-finitep", "non-c2xc2xc2", "abelian:2,2,2", {{"member", false}}));
      out.push_back(make("t-finitep",
                         "non-xsp3xc3",
                         "dp:xsp:3,p+cyclic:3",
                         {{"member", false}, {"order", 81}},
                         "non-abelian 3-group of order 81"));
      return out;
    }

    std::vector<TheoremInstance> sweep_finitesimple() {
      std::vector<TheoremInstance> out;
      out.push_back(make("t-finitesimple", "alt5", "alt:5", {{"member", true}, {"simple", true}}));
      out.push_back(make("t-finitesimple", "alt6", "alt:6", {{"member", true}, {"simple", true}}));
      for (std::size_t q : {4, 5, 7, 8, 9, 11, 13, 17}) {
        bool const member = q == 4 || q == 9 || is_fermat_prime(q) || is_mersenne_prime(q);
        std::size_t const g = (q % 2 == 1) ? 2 : 1;
        out.push_back(make("t-finitesimple",
                           "psl2-" + pad(q, 2),
                           "psl2:" + std::to_string(q),
                           {{"member", member},
                            {"simple", true},
                            {"order", q * (q * q - 1) / g}}));
      }
      return out;
    }

    std::vector<TheoremInstance> sweep_ncsupersoluble() {
      std::vector<TheoremInstance> out;
      for (std::uint64_t p : {3, 5, 7}) {
        std::string const ps = std::to_string(p);
        for (std::uint64_t d = 2; d <= p - 1; ++d) {
          if ((p - 1) % d != 0) {
            continue;
          }
          std::string const ds    = std::to_string(d);
          std::string const x     = "cyclic:" + ds;
          auto const        lam   = unit_of_order(d, p);
          auto const        alpha = unit_of_order(d, p * p);
          // scalar action on the elementary abelian group: always fpf
          out.push_back(make("t-ncsupersoluble",
                             "p" + ps + "-cpxcp-d" + ds,
                             sdp_spec(x, "abelian:" + ps + "," + ps, {{0, {lam, lam}}}),
                             {{"fpf", true}, {"member", true}, {"order", p * p * d}}));
          // A -> A^lam, B -> B^lam acts on the center by lam^2: fpf iff d is odd
          bool const heis_fpf = d % 2 == 1;
          out.push_back(make("t-ncsupersoluble",
                             "p" + ps + "-heis-d" + ds,
                             sdp_spec(x, "xsp:" + ps + ",p", {{0, {lam, lam}}}),
                             {{"fpf", heis_fpf}, {"member", heis_fpf}, {"order", p * p * p * d}}));
          // a -> a^alpha, b -> b fixes b: never fpf
          out.push_back(make("t-ncsupersoluble",
                             "p" + ps + "-m3-d" + ds,
                             sdp_spec(x, "xsp:" + ps + ",p2", {{0, {alpha, 1}}}),
                             {{"fpf", false}, {"member", false}, {"order", p * p * p * d}}));
        }
        // one non-fpf negative on the elementary abelian group
        auto const g = static_cast<std::int64_t>(least_primitive_root(p));
        out.push_back(make("t-ncsupersoluble",
                           "p" + ps + "-cpxcp-negative",
                           sdp_spec("cyclic:" + std::to_string(p - 1),
                                    "abelian:" + ps + "," + ps,
                                    {{0, {g, 1}}}),
                           {{"fpf", false}, {"member", false}, {"order", p * p * (p - 1)}}));
      }
      TheoremInstance m = make("t-ncsupersoluble",
                               "zz-minimality",
                               "",
                               {{"least_member_order", 18}, {"least_odd_member_order", 147}},
                               "minimality within this sweep only");
      m.param = {{"sweep", "t-ncsupersoluble"}};
      out.push_back(std::move(m));
      return out;
    }

    std::vector<TheoremInstance> sweep_csupersoluble() {
      return {
          make("t-csupersoluble",
               "i-s3",
               sdp_spec("cyclic:2", "cyclic:3", {{0, {2}}}),
               {{"member", true}, {"fpf", true}, {"order", 6}}),
          make("t-csupersoluble",
               "ii-q8-c3-explicit",
               q8_on_c3(),
               {{"member", true},
                {"order", 24},
                {"sylow2", "q:8"},
                {"center_is_sylow2_center", true}}),
          make("t-csupersoluble",
               "ii-printed-c24",
               "pres:ex-c24",
               {{"member", false}, {"order", 24}, {"sylow2", "dihedral:8"}},
               "printed relations give a dihedral Sylow 2-subgroup"),
          make("t-csupersoluble",
               "iii-c3-c4",
               sdp_spec("cyclic:4", "cyclic:3", {{0, {2}}}),
               {{"member", true}, {"order", 12}}),
          make("t-csupersoluble", "iii-printed-c12", "pres:ex-c12", {{"member", true}, {"order", 12}}),
          make("t-csupersoluble",
               "negative-dihedral12",
               "dihedral:12",
               {{"member", false}, {"supersolvable", true}}),
          make("t-csupersoluble",
               "negative-s3xc3",
               "dp:sym:3+cyclic:3",
               {{"member", false}, {"supersolvable", true}}),
      };
    }

    std::vector<TheoremInstance> sweep_examples() {
      return {
          make("examples",
               "nc18",
               "pres:ex-nc18",
               {{"order", 18}, {"convention", "A"}, {"member", true}}),
          make("examples",
               "nc147",
               "pres:ex-nc147",
               {{"order", 147}, {"convention", "B"}, {"member", true}, {"odd", true}}),
          make("examples",
               "c24-printed",
               "pres:ex-c24",
               {{"order", 24},
                {"convention", "B"},
                {"member", false},
                {"sylow2", "dihedral:8"},
                {"center_is_sylow2_center", true}}),
          make("examples",
               "c24-explicit",
               q8_on_c3(),
               {{"order", 24},
                {"member", true},
                {"sylow2", "q:8"},
                {"center_is_sylow2_center", true}}),
          make("examples",
               "c12",
               "pres:ex-c12",
               {{"order", 12}, {"convention", "B"}, {"member", true}}),
          make("examples",
               "odd75",
               "pres:odd75",
               {{"order", 75},
                {"convention", "B"},
                {"member", true},
                {"odd", true},
                {"supersolvable", false}}),
      };
    }

    std::vector<TheoremInstance> sweep_witnesses() {
      return {
          make("exclusion-witnesses",
               "a7",
               "witness:a7",
               {{"recognized", "abelian:2,6"}, {"certified", true}}),
          make("exclusion-witnesses",
               "a7-fixture",
               "witness:@fixtures/a7_witness.json",
               {{"recognized", "abelian:2,6"}, {"certified", true}}),
          make("exclusion-witnesses",
               "m11",
               "witness:m11",
               {{"recognized", "dihedral:12"}, {"certified", true}}),
          make("exclusion-witnesses",
               "m11-fixture",
               "witness:@fixtures/m11_witness.json",
               {{"recognized", "dihedral:12"}, {"certified", true}}),
          make("exclusion-witnesses",
               "psl3-07",
               "witness:psl3:7",
               {{"recognized", "dihedral:12"}, {"certified", true}}),
          make("exclusion-witnesses",
               "psl3-07-fixture",
               "witness:@fixtures/psl3_7_witness.json",
               {{"recognized", "dihedral:12"}, {"certified", true}}),
          make("exclusion-witnesses",
               "psl3-11",
               "witness:psl3:11",
               {{"recognized", "dihedral:20"}, {"certified", true}}),
          make("exclusion-witnesses",
               "psl3-03",
               "witness:psl3:3",
               {{"recognized", "abelian:2,2"}, {"certified", false}},
               "p = 3: the matrix pair generates C2 x C2, which lies in X"),
      };
    }

    std::vector<TheoremInstance> sweep_normalizer() {
      std::vector<TheoremInstance> out;
      for (std::size_t p : {5, 7}) {
        TheoremInstance t = make("psl2-normalizer",
                                 "p" + std::to_string(p),
                                 "psl2:" + std::to_string(p),
                                 {{"sylow_normalizer_self_centralizing", true},
                                  {"normalizer_order", p * (p - 1) / 2}});
        t.param = {{"p", p}};
        out.push_back(std::move(t));
      }
      return out;
    }
  }  // namespace

  std::vector<CorpusEntry> const& corpus() {
    static std::vector<CorpusEntry> const entries = [] {
      std::vector<CorpusEntry> c;
      for (std::size_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 16, 30}) {
        c.push_back({"cyclic:" + std::to_string(n), n, true, true});
      }
      std::vector<std::pair<std::string, std::size_t>> const ab{
          {"2,2", 4},   {"2,4", 8},    {"3,3", 9},   {"2,2,2", 8},   {"2,6", 12},
          {"3,9", 27},  {"5,5", 25},   {"2,2,4", 16}, {"4,4", 16},   {"7,7", 49},
          {"2,2,2,2", 16}, {"3,3,3", 27}};
      for (auto const& [f, n] : ab) {
        c.push_back({"abelian:" + f, n, true, false});
      }
      for (std::size_t n : {6, 8, 10, 12, 14, 16, 18, 20, 24, 30, 32, 42}) {
        c.push_back({"dihedral:" + std::to_string(n), n, false, false});
      }
      c.push_back({"sd:16", 16, false, false});
      c.push_back({"sd:32", 32, false, false});
      c.push_back({"q:8", 8, false, false});
      c.push_back({"q:16", 16, false, false});
      c.push_back({"q:32", 32, false, false});
      c.push_back({"xsp:3,p", 27, false, false});
      c.push_back({"xsp:3,p2", 27, false, false});
      c.push_back({"xsp:5,p", 125, false, false});
      c.push_back({"xsp:5,p2", 125, false, false});
      c.push_back({"sym:3", 6, false, false});
      c.push_back({"sym:4", 24, false, false});
      c.push_back({"sym:5", 120, false, false});
      c.push_back({"alt:4", 12, false, false});
      c.push_back({"alt:5", 60, false, false});
      c.push_back({"psl2:4", 60, false, false});
      c.push_back({"psl2:5", 60, false, false});
      c.push_back({"psl2:7", 168, false, false});
      c.push_back({sdp_spec("cyclic:2", "cyclic:3", {{0, {2}}}), 6, false, false});
      c.push_back({sdp_spec("cyclic:2", "cyclic:5", {{0, {4}}}), 10, false, false});
      c.push_back({sdp_spec("cyclic:4", "cyclic:3", {{0, {2}}}), 12, false, false});
      c.push_back({sdp_spec("cyclic:4", "cyclic:5", {{0, {2}}}), 20, false, false});
      c.push_back({sdp_spec("cyclic:3", "cyclic:7", {{0, {2}}}), 21, false, false});
      c.push_back({sdp_spec("cyclic:3", "cyclic:13", {{0, {3}}}), 39, false, false});
      c.push_back({sdp_spec("cyclic:5", "cyclic:11", {{0, {3}}}), 55, false, false});
      c.push_back({sdp_spec("cyclic:2", "abelian:3,3", {{0, {2, 2}}}), 18, false, false});
      c.push_back({sdp_spec("cyclic:3", "abelian:7,7", {{0, {2, 2}}}), 147, false, false});
      c.push_back({sdp_spec("cyclic:2", "cyclic:3", {{0, {1}}}), 6, true, true});
      c.push_back({q8_on_c3(), 24, false, false});
      c.push_back({"pres:ex-nc18", 18, false, false});
      c.push_back({"pres:ex-c24", 24, false, false});
      c.push_back({"pres:ex-c12", 12, false, false});
      c.push_back({"pres:odd75", 75, false, false});
      c.push_back({"pres:ex-nc147", 147, false, false});
      c.push_back({"dp:dihedral:8+cyclic:2", 16, false, false});
      c.push_back({"dp:q:8+cyclic:2", 16, false, false});
      c.push_back({"dp:sym:3+cyclic:3", 18, false, false});
      c.push_back({"dp:sym:3+sym:3", 36, false, false});
      c.push_back({"dp:cyclic:4+cyclic:4", 16, true, false});
      c.push_back({"dp:cyclic:3+cyclic:5", 15, true, true});
      c.push_back({"dp:xsp:3,p+cyclic:3", 81, false, false});
      c.push_back({"perms:(1,2,3,4,5,6,7,8);(2,8)(3,7)(4,6)", 16, false, false});
      c.push_back({"perms:(1,2)(3,4);(1,3)(2,4);(5,6,7)", 12, true, false});
      return c;
    }();
    return entries;
  }

  bool class_c_prediction(std::size_t order, bool abelian, bool cyclic) {
    if (abelian) {
      return cyclic && is_prime(order);
    }
    auto const f = factorize(order);
    if (f.size() != 2 || f[0].second != 1 || f[1].second != 1) {
      return false;
    }
    std::uint64_t const q = f[0].first;
    std::uint64_t const p = f[1].first;
    return p % q == 1;
  }

  std::vector<TheoremInstance> default_instances(std::string_view theorem) {
    if (theorem == "all") {
      std::vector<TheoremInstance> out;
      for (auto const& id : theorem_ids()) {
        auto part = default_instances(id);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    if (theorem == "class-C-finite") {
      return sweep_class_c();
    }
    if (theorem == "lemma-family") {
      return sweep_lemma_family();
    }
    if (theorem == "t-abelian") {
      return sweep_abelian();
    }
    if (theorem == "t-finitep") {
      return sweep_finitep();
    }
    if (theorem == "p-dihedral") {
      return sweep_dihedral();
    }
    if (theorem == "t-finitesimple") {
      return sweep_finitesimple();
    }
    if (theorem == "t-ncsupersoluble") {
      return sweep_ncsupersoluble();
    }
    if (theorem == "t-csupersoluble") {
      return sweep_csupersoluble();
    }
    if (theorem == "examples") {
      return sweep_examples();
    }
    if (theorem == "exclusion-witnesses") {
      return sweep_witnesses();
    }
    if (theorem == "psl2-normalizer") {
      return sweep_normalizer();
    }
    throw UsageError("unknown theorem id '" + std::string(theorem) + "'");
  }

  namespace {
    json witness_json(MembershipVerdict const& v) {
      return verdict_to_json(v, "").at("witness");
    }

    class Evaluation {
     public:
      Evaluation(TheoremInstance const& inst, VerifyOptions const& opts) : _inst(inst) {
        _ctx.base_dir = opts.data_dir;
        if (opts.max_order) {
          _ctx.closure.max_order = *opts.max_order;
        }
      }

      void run(TheoremReport& r) {
        for (auto const& [key, val] : _inst.expect.items()) {
          r.computed[key] = compute(key);
        }
        r.witness = _witness;
        r.info    = _info;
      }

     private:
      ResolvedGroup const& resolved() {
        if (!_resolved) {
          if (_inst.spec.empty()) {
            throw UsageError("instance " + _inst.id + " has no group spec");
          }
          _resolved = resolve_group_spec(_inst.spec, _ctx);
          if (_resolved->realization) {
            auto const& rz = *_resolved->realization;
            _info["order_a"] = rz.order_a ? json(*rz.order_a) : json(nullptr);
            _info["order_b"] = rz.order_b ? json(*rz.order_b) : json(nullptr);
          }
        }
        return *_resolved;
      }
      FiniteGroup const& group() {
        return *resolved().group;
      }

      MembershipVerdict const& x_verdict() {
        if (!_x) {
          _x = in_class_X(group());
          if (_x->witness) {
            _witness = witness_json(*_x);
          }
        }
        return *_x;
      }

      SubgroupRef const& sylow2() {
        if (!_sylow2) {
          _sylow2 = sylow_subgroup(group(), 2);
        }
        return *_sylow2;
      }

      std::size_t param_p() const {
        if (!_inst.param.contains("p")) {
          throw UsageError("instance " + _inst.id + " needs param \"p\"");
        }
        return _inst.param.at("p").get<std::size_t>();
      }

      json compute(std::string const& key) {
        if (key == "member") {
          return x_verdict().member;
        }
        if (key == "member_c") {
          auto v = in_class_C(group());
          if (v.witness && _witness.is_null()) {
            _witness = witness_json(v);
          }
          return v.member;
        }
        if (key == "order") {
          return group().order();
        }
        if (key == "odd") {
          return group().order() % 2 == 1;
        }
        if (key == "convention") {
          auto const& rz = resolved().realization;
          return rz ? json(std::string(to_string(rz->convention))) : json(nullptr);
        }
        if (key == "supersolvable") {
          auto s = is_supersolvable(group());
          return s ? json(*s) : json(nullptr);
        }
        if (key == "simple") {
          return is_simple(group());
        }
        if (key == "recognized") {
          return describe(group());
        }
        if (key == "two_group_family") {
          auto d = structure(group());
          return d.two_group_family ? json(std::string(to_string(*d.two_group_family)))
                                    : json(nullptr);
        }
        if (key == "sylow2") {
          return describe(*as_group(sylow2()));
        }
        if (key == "sylow2_family") {
          auto d = structure(*as_group(sylow2()));
          return d.two_group_family ? json(std::string(to_string(*d.two_group_family)))
                                    : json(nullptr);
        }
        if (key == "center_is_sylow2_center") {
          auto const& P  = sylow2();
          auto        zp = centralizer(group(), P).members() & P.members();
          return zp == group().center_set();
        }
        if (key == "fpf") {
          auto const& a = resolved().action;
          return a ? json(acts_fixed_point_freely(*a)) : json(nullptr);
        }
        if (key == "certified") {
          auto const& w = resolved().witness;
          if (!w) {
            return nullptr;
          }
          auto v = certify_non_membership(w->ambient, w->generators, _ctx.closure);
          if (v.witness) {
            _witness = witness_json(v);
          }
          _info["ambient"] = w->ambient;
          return v.conclusive && !v.member;
        }
        if (key == "lemma_agree" || key == "family_in_X") {
          compute_family();
          return key == "lemma_agree" ? _lemma_agree : _family_in_x;
        }
        if (key == "sylow_normalizer_self_centralizing" || key == "normalizer_order") {
          auto const& G = group();
          auto        P = sylow_subgroup(G, param_p());
          auto        N = normalizer(G, P);
          if (key == "normalizer_order") {
            return N.order();
          }
          auto cnp = centralizer(G, P).members() & N.members();
          return cnp == P.members();
        }
        if (key == "least_member_order" || key == "least_odd_member_order") {
          compute_minimality();
          auto const& v = key == "least_member_order" ? _least : _least_odd;
          return v ? json(*v) : json(nullptr);
        }
        throw UsageError("unknown expectation key '" + key + "'");
      }

      void compute_family() {
        if (_family_done) {
          return;
        }
        auto const& G         = group();
        bool        all_crit  = true;
        bool        all_x     = true;
        std::size_t mismatch  = 0;
        auto        subgroups = all_subgroups(G);
        for (auto const& S : subgroups) {
          auto       H    = as_group(S);
          bool const crit = noncyclic_subgroups_contain_center(*H);
          bool const inx  = in_class_X(*H).member;
          all_crit &= crit;
          all_x &= inx;
          mismatch += crit != inx;
        }
        _family_in_x          = all_x;
        _lemma_agree          = all_crit == all_x;
        _info["family_size"]  = subgroups.size();
        _info["memberwise_mismatches"] = mismatch;
        _family_done          = true;
      }

      void compute_minimality() {
        if (_minimality_done) {
          return;
        }
        std::string const sweep = _inst.param.value("sweep", std::string());
        std::size_t       skipped = 0;
        for (auto const& t : default_instances(sweep)) {
          if (t.spec.empty() || !t.expect.contains("member")) {
            continue;
          }
          try {
            auto       G      = build_group(t.spec, _ctx);
            bool const member = in_class_X(*G).member;
            if (member) {
              if (!_least || G->order() < *_least) {
                _least = G->order();
              }
              if (G->order() % 2 == 1 && (!_least_odd || G->order() < *_least_odd)) {
                _least_odd = G->order();
              }
            }
          } catch (CapExceeded const&) {
            ++skipped;
          }
        }
        _info["skipped_in_sweep"] = skipped;
        _minimality_done          = true;
      }

      TheoremInstance const&           _inst;
      SpecContext                      _ctx;
      std::optional<ResolvedGroup>     _resolved;
      std::optional<MembershipVerdict> _x;
      std::optional<SubgroupRef>       _sylow2;
      json                             _witness;
      json                             _info = json::object();
      bool                             _family_done = false;
      bool                             _lemma_agree = false;
      bool                             _family_in_x = false;
      bool                             _minimality_done = false;
      std::optional<std::size_t>       _least;
      std::optional<std::size_t>       _least_odd;
    };
  }  // namespace

  TheoremReport evaluate(TheoremInstance const& inst, VerifyOptions const& opts) {
    TheoremReport r;
    r.id       = inst.id;
    r.theorem  = inst.theorem;
    r.spec     = inst.spec;
    r.expected = inst.expect;
    auto const start = std::chrono::steady_clock::now();
    try {
      Evaluation e(inst, opts);
      e.run(r);
      r.status = r.computed == r.expected ? ReportStatus::pass : ReportStatus::fail;
      if (!inst.note.empty()) {
        r.message = inst.note;
      }
    } catch (CapExceeded const& e) {
      r.status  = ReportStatus::skipped;
      r.message = e.what();
    } catch (std::exception const& e) {
      r.status  = ReportStatus::fail;
      r.message = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count();
    return r;
  }

  std::vector<TheoremReport> run_instances(std::vector<TheoremInstance> const& instances,
                                           VerifyOptions const&               opts) {
    std::vector<TheoremReport> reports(instances.size());
    std::atomic<std::size_t>   next{0};
    auto                       worker = [&] {
      for (std::size_t i = next++; i < instances.size(); i = next++) {
        reports[i] = evaluate(instances[i], opts);
      }
    };
    std::size_t const jobs = std::max<std::size_t>(1, std::min(opts.jobs, instances.size()));
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t k = 0; k < jobs; ++k) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    std::stable_sort(reports.begin(), reports.end(), [](auto const& a, auto const& b) {
      return a.id < b.id;
    });
    return reports;
  }

  std::vector<TheoremReport> verify(std::string_view theorem, VerifyOptions const& opts) {
    return run_instances(default_instances(theorem), opts);
  }

  json instance_to_json(TheoremInstance const& inst) {
    json j{{"id", inst.id}, {"theorem", inst.theorem}, {"spec", inst.spec}, {"expect", inst.expect}};
    if (!inst.param.empty()) {
      j["param"] = inst.param;
    }
    if (!inst.note.empty()) {
      j["note"] = inst.note;
    }
    return j;
  }

  TheoremInstance instance_from_json(json const& j) {
    if (!j.is_object() || !j.contains("id") || !j.contains("theorem")) {
      throw UsageError("manifest entry needs \"id\" and \"theorem\"");
    }
    TheoremInstance t;
    t.id      = j.at("id").get<std::string>();
    t.theorem = j.at("theorem").get<std::string>();
    t.spec    = j.value("spec", std::string());
    auto const& ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), t.theorem) == ids.end()) {
      throw UsageError("manifest entry " + t.id + ": unknown theorem '" + t.theorem + "'");
    }
    if (j.contains("expect")) {
      auto const& e = j.at("expect");
      if (e.is_string()) {
        auto const s = e.get<std::string>();
        if (s != "member" && s != "non-member") {
          throw UsageError("manifest entry " + t.id + ": expect must be an object, "
                           "\"member\" or \"non-member\"");
        }
        t.expect = {{"member", s == "member"}};
      } else if (e.is_object()) {
        t.expect = e;
      } else {
        throw UsageError("manifest entry " + t.id + ": bad expect");
      }
    }
    if (j.contains("param")) {
      t.param = j.at("param");
    }
    t.note = j.value("note", std::string());
    return t;
  }

  std::vector<TheoremInstance> parse_manifest(json const& j) {
    if (!j.is_array()) {
      throw UsageError("manifest must be a JSON array");
    }
    std::vector<TheoremInstance> out;
    for (auto const& e : j) {
      out.push_back(instance_from_json(e));
    }
    return out;
  }

  json manifest_to_json(std::vector<TheoremInstance> const& instances) {
    json a = json::array();
    for (auto const& t : instances) {
      a.push_back(instance_to_json(t));
    }
    return a;
  }

  std::vector<TheoremReport> run_manifest(std::filesystem::path const& path, VerifyOptions opts) {
    auto instances = parse_manifest(read_json_file(path));
    opts.data_dir  = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    return run_instances(instances, opts);
  }

  std::string_view to_string(ReportStatus s) noexcept {
    switch (s) {
      case ReportStatus::pass:
        return "pass";
      case ReportStatus::fail:
        return "fail";
      case ReportStatus::skipped:
        return "skipped";
    }
    return "fail";
  }

  json report_to_json(TheoremReport const& r) {
    json j;
    j["id"]         = r.id;
    j["theorem"]    = r.theorem;
    j["spec"]       = r.spec;
    j["status"]     = to_string(r.status);
    j["pass"]       = r.status == ReportStatus::pass;
    j["expected"]   = r.expected;
    j["computed"]   = r.computed;
    j["witness"]    = r.witness;
    if (!r.info.empty()) {
      j["info"] = r.info;
    }
    if (!r.message.empty()) {
      j["message"] = r.message;
    }
    j["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
    return j;
  }

  std::string reports_to_jsonl(std::vector<TheoremReport> const& reports) {
    std::string out;
    for (auto const& r : reports) {
      out += report_to_json(r).dump();
      out += '\n';
    }
    return out;
  }

  ReportSummary summarize(std::vector<TheoremReport> const& reports) {
    ReportSummary s;
    for (auto const& r : reports) {
      switch (r.status) {
        case ReportStatus::pass:
          ++s.pass;
          break;
        case ReportStatus::fail:
          ++s.fail;
          break;
        case ReportStatus::skipped:
          ++s.skipped;
          break;
      }
    }
    return s;
  }

  int exit_status(std::vector<TheoremReport> const& reports) {
    return summarize(reports).fail == 0 ? 0 : 1;
  }

}  // namespace centra
