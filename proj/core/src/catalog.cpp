#include "centra/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "centra/error.hpp"
#include "centra/number_theory.hpp"

namespace centra {

  namespace {
    constexpr std::array<CatalogPresentation, 5> kCatalog{{
        {"ex-nc18",
         "gens: a b c\n"
         "a^2 = b^3 = c^3 = 1, [b,a] = b^2, [c,a] = c^2, [c,b] = 1\n",
         18},
        {"ex-nc147",
         "gens: a b c\n"
         "a^3 = b^7 = c^7 = 1, [b,a] = b, [c,a] = c, [c,b] = 1\n",
         147},
        {"ex-c24",
         "gens: g1 g2 g3 g4\n"
         "g1^2 = g2^2 = g3^2 = g4^3 = 1\n"
         "[g2,g1] = g3, [g4,g1] = g4\n"
         "[g3,g1] = 1, [g3,g2] = 1, [g4,g2] = 1, [g4,g3] = 1\n",
         24},
        {"ex-c12",
         "gens: a b c\n"
         "a^2 = b, b^2 = c^3 = 1, [b,a] = 1, [c,a] = c, [c,b] = 1\n",
         12},
        {"odd75",
         "gens: a b c\n"
         "a^3 = b^5 = c^5 = 1, [b,a] = c^2, [c,a] = bc^2, [c,b] = 1\n",
         75},
    }};
  }  // namespace

  std::span<CatalogPresentation const> presentation_catalog() {
    return kCatalog;
  }

  CatalogPresentation const& find_presentation(std::string_view name) {
    for (auto const& c : kCatalog) {
      if (c.name == name) {
        return c;
      }
    }
    throw UsageError("unknown catalog presentation '" + std::string(name) + "'");
  }

  ExclusionWitness a7_witness() {
    return {"a7",
            "A7",
            {Perm::from_cycles("(1,2)(3,4)(5,6,7)", 7), Perm::from_cycles("(1,3)(2,4)", 7)},
            "abelian:2,6"};
  }

  ExclusionWitness m11_witness() {
    return {"m11",
            "M11",
            {Perm::from_cycles("(1,2,3)(4,10)(5,11,6,8,9,7)", 11),
             Perm::from_cycles("(2,3)(5,11)(6,7)(8,9)", 11)},
            "dihedral:12"};
  }

  std::array<Matrix3, 2> psl3_witness_matrices(std::uint32_t p) {
    if (!is_prime(p) || p < 3) {
      throw UsageError("psl3 witness: p must be an odd prime");
    }
    auto const    g  = static_cast<std::uint32_t>(least_primitive_root(p));
    std::uint64_t gp = 1;
    for (std::uint32_t k = 0; k < p - 2; ++k) {
      gp = gp * g % p;
    }
    Matrix3 const s{0, 1, 0, 1, 0, 0, 0, 0, p - 1};
    Matrix3 const d{static_cast<std::uint32_t>(gp), 0, 0, 0, g, 0, 0, 0, 1};
    return {s, d};
  }

  ExclusionWitness psl3_witness(std::uint32_t p) {
    auto const m = psl3_witness_matrices(p);
    return {"psl3:" + std::to_string(p),
            "PSL3(" + std::to_string(p) + ")",
            {projective_plane_perm(p, m[0]), projective_plane_perm(p, m[1])},
            "dihedral:" + std::to_string(2 * (p - 1))};
  }

  ExclusionWitness find_witness(std::string_view name) {
    if (name == "a7") {
      return a7_witness();
    }
    if (name == "m11") {
      return m11_witness();
    }
    if (name.starts_with("psl3:")) {
      std::uint32_t p   = 0;
      auto          arg = name.substr(5);
      auto [ptr, ec]    = std::from_chars(arg.data(), arg.data() + arg.size(), p);
      if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
        throw UsageError("bad psl3 witness '" + std::string(name) + "'");
      }
      return psl3_witness(p);
    }
    throw UsageError("unknown witness '" + std::string(name) + "'");
  }

}  // namespace centra
