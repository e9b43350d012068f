#include "centra/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "centra/error.hpp"
#include "centra/number_theory.hpp"

namespace centra {

  using nlohmann::json;

  json perm_to_json(Perm const& p) {
    json a = json::array();
    for (Point x : p.images()) {
      a.push_back(x);
    }
    return a;
  }

  Perm perm_from_json(json const& j, std::size_t degree) {
    if (j.is_string()) {
      return Perm::from_cycles(j.get<std::string>(), degree);
    }
    if (!j.is_array()) {
      throw UsageError("permutation must be an image array or a cycle string");
    }
    std::vector<Point> images;
    for (auto const& x : j) {
      if (!x.is_number_unsigned()) {
        throw UsageError("permutation images must be non-negative integers");
      }
      images.push_back(x.get<Point>());
    }
    Perm p(std::move(images));
    if (degree > p.degree()) {
      p = extend_degree(p, degree);
    }
    return p;
  }

  json group_to_json(FiniteGroup const& G) {
    json gens = json::array();
    for (auto const& g : G.generators()) {
      gens.push_back(perm_to_json(g));
    }
    return {{"degree", G.degree()}, {"generators", gens}, {"order", G.order()}};
  }

  GroupPtr group_from_json(json const& j, ClosureOptions const& opts) {
    if (!j.is_object() || !j.contains("generators")) {
      throw UsageError("group JSON needs \"generators\"");
    }
    std::size_t const degree = j.value("degree", std::size_t(0));
    std::vector<Perm> gens;
    for (auto const& g : j.at("generators")) {
      gens.push_back(perm_from_json(g, degree));
    }
    if (gens.empty()) {
      gens.push_back(Perm::identity(degree == 0 ? 1 : degree));
    }
    std::size_t d = 0;
    for (auto const& g : gens) {
      d = std::max(d, g.degree());
    }
    for (auto& g : gens) {
      g = extend_degree(g, d);
    }
    auto G = close_generators(std::move(gens), opts);
    if (j.contains("order") && j.at("order").get<std::size_t>() != G->order()) {
      throw UsageError("group JSON: stated order " + j.at("order").dump()
                       + " differs from closure order " + std::to_string(G->order()));
    }
    return G;
  }

  json verdict_to_json(MembershipVerdict const& v, std::string_view spec) {
    json out;
    out["group"]  = spec;
    out["class"]  = to_string(v.cls);
    out["member"] = v.conclusive ? json(v.member) : json(nullptr);
    out["method"] = to_string(v.method);
    if (v.witness && v.group) {
      json gens = json::array();
      for (Elem g : v.witness->generators) {
        gens.push_back(v.group->element(g).to_cycles());
      }
      out["witness"] = {{"generators", gens}, {"z", v.group->element(v.witness->z).to_cycles()}};
    } else {
      out["witness"] = nullptr;
    }
    if (!v.ambient.empty()) {
      out["ambient"] = v.ambient;
    }
    return out;
  }

  json structure_to_json(StructureDescriptor const& d) {
    json out;
    out["order"]             = d.order;
    out["abelian"]           = d.is_abelian;
    out["invariant_factors"] = d.invariant_factors;
    out["nilpotency_class"]  = d.nilpotency_class ? json(*d.nilpotency_class) : json(nullptr);
    out["supersolvable"]     = d.is_supersolvable ? json(*d.is_supersolvable) : json(nullptr);
    out["two_group_family"]
        = d.two_group_family ? json(std::string(to_string(*d.two_group_family))) : json(nullptr);
    out["center_order"] = d.center_order;
    return out;
  }

  json subgroup_counts_to_json(FiniteGroup const& G, SubgroupList const& list) {
    std::map<std::size_t, std::size_t> by_order;
    for (auto const& S : list) {
      ++by_order[S.order()];
    }
    json bo = json::object();
    for (auto [d, n] : by_order) {
      bo[std::to_string(d)] = n;
    }
    return {{"order", G.order()}, {"subgroups", list.size()}, {"by_order", bo}};
  }

  ExclusionWitness witness_from_json(json const& j) {
    ExclusionWitness w;
    w.name     = j.value("name", std::string());
    w.ambient  = j.value("ambient", std::string());
    w.expected = j.value("expect", std::string());
    if (j.contains("matrices")) {
      auto const p = j.at("field").get<std::uint32_t>();
      if (!is_prime(p)) {
        throw UsageError("witness field must be prime");
      }
      for (auto const& m : j.at("matrices")) {
        Matrix3 mat{};
        std::size_t k = 0;
        for (auto const& row : m) {
          for (auto const& x : row) {
            if (k == 9) {
              throw UsageError("witness matrices must be 3x3");
            }
            mat[k++] = x.get<std::uint32_t>() % p;
          }
        }
        if (k != 9) {
          throw UsageError("witness matrices must be 3x3");
        }
        w.generators.push_back(projective_plane_perm(p, mat));
      }
    } else {
      std::size_t const degree = j.value("degree", std::size_t(0));
      for (auto const& g : j.at("generators")) {
        w.generators.push_back(perm_from_json(g, degree));
      }
    }
    if (w.generators.empty()) {
      throw UsageError("witness has no generators");
    }
    return w;
  }

  json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return json::parse(ss.str());
    } catch (json::parse_error const& e) {
      throw ParseError(path.string() + ": " + e.what(), 0, e.byte);
    }
  }

}  // namespace centra
