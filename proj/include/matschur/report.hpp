#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matschur/schur.hpp"

namespace matschur {

// Serializable record of a run.  Sections left empty are omitted from the
// JSON; rationals are emitted as "num/den" strings.
struct Report {
  std::string matroid_name;
  int n = 0;
  std::vector<std::int64_t> weights;
  std::string field = "Q";  // "Q" or "Fp"
  std::int64_t p = 0;       // meaningful when field == "Fp"
  std::vector<Subset> flats;

  std::map<Subset, Character> standard_characters;
  std::map<Subset, Character> simple_characters;

  struct DecompEntry {
    Subset standard_flat = 0;
    Subset simple_flat = 0;
    long long mult = 0;
    bool operator==(const DecompEntry&) const = default;
  };
  std::vector<DecompEntry> decomposition;

  std::vector<std::int64_t> bad_primes;
  std::vector<std::pair<Subset, Subset>> zero_sum_pairs;

  struct DetRecord {
    Subset lower = 0, upper = 0;
    std::vector<DetFactorization::Factor> factors;
    Rat predicted;
    Rat gram;
    bool match = false;
    bool operator==(const DetRecord& o) const {
      return lower == o.lower && upper == o.upper && predicted == o.predicted &&
             gram == o.gram && match == o.match && factors_equal(o);
    }
    bool factors_equal(const DetRecord& o) const;
  };
  std::vector<DetRecord> determinants;

  struct IdentitySummary {
    bool dimension_identity = false;
    bool springer_refinement = false;
    bool tutte_convolution = false;
    long long bases_count = 0;
    long long flat_sum = 0;
    long long springer_sum = 0;
    bool operator==(const IdentitySummary&) const = default;
  };
  std::optional<IdentitySummary> identities;

  struct AxiomSummary {
    bool a1 = false, a2 = false, a3 = false, subrings = false;
    bool u_perp_ucheck = false, uperp_is_im_delta_h = false, contraction_stability = false;
    std::vector<std::string> violations;
    bool operator==(const AxiomSummary&) const = default;
  };
  std::optional<AxiomSummary> axioms;

  bool operator==(const Report& o) const;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

std::string render_text(const Report& r);

// "[0,1,3]" form used for JSON object keys and flat lists
std::string subset_to_key(Subset s);
Subset subset_from_key(const std::string& key);

}  // namespace matschur
