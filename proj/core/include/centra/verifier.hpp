#ifndef CENTRA_VERIFIER_HPP_
#define CENTRA_VERIFIER_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace centra {

  //! One machine-checkable claim. "expect" maps computed keys to values:
  //!   member, member_c          class X / class C membership
  //!   order, odd, convention    realized group data
  //!   supersolvable, simple, recognized, two_group_family
  //!   sylow2, sylow2_family, center_is_sylow2_center
  //!   fpf                       the sdp action is fixed-point-free
  //!   certified                 a witness subgroup certifies non-membership
  //!   lemma_agree, family_in_X  subgroup-family center criterion
  //!   sylow_normalizer_self_centralizing, normalizer_order   (param "p")
  //!   least_member_order, least_odd_member_order  (param "sweep")
  struct TheoremInstance {
    std::string    id;
    std::string    theorem;
    std::string    spec;
    nlohmann::json expect = nlohmann::json::object();
    nlohmann::json param  = nlohmann::json::object();
    std::string    note;
  };

  enum class ReportStatus { pass, fail, skipped };

  struct TheoremReport {
    std::string    id;
    std::string    theorem;
    std::string    spec;
    ReportStatus   status = ReportStatus::fail;
    nlohmann::json expected = nlohmann::json::object();
    nlohmann::json computed = nlohmann::json::object();
    nlohmann::json witness;  // null when none
    nlohmann::json info = nlohmann::json::object();
    std::string    message;
    double         elapsed_ms = 0.0;
  };

  struct VerifyOptions {
    std::size_t jobs = 1;
    //! Closure cap; groups above it are skipped rather than failed.
    std::optional<std::size_t> max_order;
    //! Base directory for '@' paths in specs.
    std::filesystem::path data_dir = default_data_dir();

    static std::filesystem::path default_data_dir();
  };

  //! Theorem ids in canonical order.
  std::vector<std::string> const& theorem_ids();

  //! Built-in sweep for one theorem id, or every sweep for "all". Throws
  //! UsageError for unknown ids.
  std::vector<TheoremInstance> default_instances(std::string_view theorem);

  //! Group specs of the oracle corpus with order, abelian and cyclic flags
  //! known from the construction.
  struct CorpusEntry {
    std::string spec;
    std::size_t order;
    bool        abelian;
    bool        cyclic;
  };
  std::vector<CorpusEntry> const& corpus();

  //! Cyclic of prime order, or non-abelian of order pq with q < p primes and
  //! p = 1 mod q.
  bool class_c_prediction(std::size_t order, bool abelian, bool cyclic);

  TheoremReport evaluate(TheoremInstance const& inst, VerifyOptions const& opts);

  //! Runs instances on opts.jobs threads; reports sorted by id.
  std::vector<TheoremReport> run_instances(std::vector<TheoremInstance> const& instances,
                                           VerifyOptions const&               opts);

  std::vector<TheoremReport> verify(std::string_view theorem, VerifyOptions const& opts);

  nlohmann::json               instance_to_json(TheoremInstance const& inst);
  TheoremInstance              instance_from_json(nlohmann::json const& j);
  std::vector<TheoremInstance> parse_manifest(nlohmann::json const& j);
  nlohmann::json               manifest_to_json(std::vector<TheoremInstance> const& instances);

  //! Reads and runs a manifest; '@' paths resolve against its directory.
  std::vector<TheoremReport> run_manifest(std::filesystem::path const& path, VerifyOptions opts);

  std::string_view to_string(ReportStatus s) noexcept;
  nlohmann::json   report_to_json(TheoremReport const& r);
  //! One JSON object per line, LF terminated.
  std::string reports_to_jsonl(std::vector<TheoremReport> const& reports);

  struct ReportSummary {
    std::size_t pass    = 0;
    std::size_t fail    = 0;
    std::size_t skipped = 0;
  };
  ReportSummary summarize(std::vector<TheoremReport> const& reports);

  //! 0 when nothing failed, 1 otherwise.
  int exit_status(std::vector<TheoremReport> const& reports);

}  // namespace centra

#endif  // CENTRA_VERIFIER_HPP_
