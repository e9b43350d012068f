#ifndef CENTRA_GROUPSPEC_HPP_
#define CENTRA_GROUPSPEC_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "centra/action.hpp"
#include "centra/catalog.hpp"
#include "centra/group.hpp"
#include "centra/todd_coxeter.hpp"

namespace centra {

  struct SpecContext {
    //! '@' paths are resolved against this directory.
    std::filesystem::path base_dir = ".";
    //! Tried when a path is missing under base_dir.
    std::filesystem::path fallback_dir;
    ClosureOptions        closure;
    ToddCoxeterOptions    coset;
  };

  //! A built group plus whatever construction data the spec carried.
  struct ResolvedGroup {
    std::string                     spec;
    GroupPtr                        group;
    std::optional<ActionSpec>       action;
    std::optional<Realization>      realization;
    std::optional<ExclusionWitness> witness;
  };

  //! Group-spec mini-language:
  //!   cyclic:12  abelian:2,4  dihedral:16  sd:32  q:16  xsp:3,p  xsp:3,p2
  //!   sym:5  alt:6  psl2:9  psl3:3
  //!   sdp:@action.json  sdp:{...inline json...}
  //!   presentation:@file.pres[#A|#B|#auto[:hint]]  pres:<catalog name>[#...]
  //!   perms:(1,2,3);(1,2)  group:@file.json  dp:<spec>+<spec>[+...]
  //!   witness:a7|m11|psl3:7|@file.json   (the witness subgroup itself)
  //! Catalog presentations default to #auto with their expected order as
  //! the hint. Throws UsageError on malformed specs.
  ResolvedGroup resolve_group_spec(std::string_view spec, SpecContext const& ctx = {});

  inline GroupPtr build_group(std::string_view spec, SpecContext const& ctx = {}) {
    return resolve_group_spec(spec, ctx).group;
  }

  //! {"acting": spec, "target": spec, "images": {"i": [...]}} where each
  //! image is a permutation of target element indices, or
  //! {"acting", "target", "power_images": {"i": [e_0, e_1, ...]}} sending the
  //! j-th target generator to its e_j-th power. Missing generators act
  //! trivially.
  ActionSpec action_from_json(nlohmann::json const& j, SpecContext const& ctx = {});

}  // namespace centra

#endif  // CENTRA_GROUPSPEC_HPP_
