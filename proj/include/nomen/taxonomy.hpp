#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "nomen/corpus.hpp"

namespace nomen {

// The six exclusive leaves every queried name falls into.
enum class TaxonLabel {
  NoData,
  GenderedHighCoverage,
  GenderedLowCoverage,
  ConditionallyGenderedCountry,
  ConditionallyGenderedDecade,
  WeaklyGendered,
};

inline std::string_view to_string(TaxonLabel label) {
  switch (label) {
    case TaxonLabel::NoData: return "no_data";
    case TaxonLabel::GenderedHighCoverage: return "gendered_high_coverage";
    case TaxonLabel::GenderedLowCoverage: return "gendered_low_coverage";
    case TaxonLabel::ConditionallyGenderedCountry: return "conditionally_gendered_country";
    case TaxonLabel::ConditionallyGenderedDecade: return "conditionally_gendered_decade";
    case TaxonLabel::WeaklyGendered: return "weakly_gendered";
  }
  return "?";
}

enum class ConditionOn { Country, Decade, CountryAndDecade };

struct TaxonomyParams {
  double entropy_threshold = 0.47;  // bits; names at or below are informative
  double coverage_threshold = 10.0; // observation weight separating low/high coverage
  // Empty map = uninformative prior: equal mass on every context observed
  // anywhere in the corpus. A supplied prior maps contexts to probabilities
  // summing to 1; for Country the decade coordinate stays -1, for Decade the
  // country stays "--".
  std::map<ContextKey, double> prior;

  void validate() const {
    if (!(entropy_threshold > 0.0 && entropy_threshold <= 1.0))
      throw std::invalid_argument("entropy_threshold must lie in (0, 1]");
    if (!(coverage_threshold > 0.0))
      throw std::invalid_argument("coverage_threshold must be positive");
    if (!prior.empty()) {
      double sum = 0.0;
      for (const auto& [ctx, p] : prior) {
        if (p < 0.0) throw std::invalid_argument("negative prior probability");
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("supplied prior does not sum to 1");
    }
  }
};

// Binary entropy in bits, with the 0 log 0 = 0 convention.
inline double entropy_bits(double p_f) {
  if (!(p_f >= 0.0 && p_f <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
  if (p_f == 0.0 || p_f == 1.0) return 0.0;
  return -(p_f * std::log2(p_f) + (1.0 - p_f) * std::log2(1.0 - p_f));
}

struct ConditionalEntropy {
  double bits = 0.0;
  // Entropy of the name's gender marginal under the same posterior over
  // contexts. Jensen guarantees bits <= marginal_bits; the raw pooled
  // entropy carries unknown-context mass that conditioning excludes, so it
  // is not comparable in general.
  double marginal_bits = 0.0;
  // True when the name has no weight in any known context and both fields
  // fall back to the unconditional pooled entropy.
  bool vacuous = false;
};

namespace detail {

struct Stratum {
  double name_weight;    // weight of the name in this context
  double context_weight; // weight of all names in this context
  double p_f;            // female share of the name in this context
  double prior;          // P(context)
};

inline ConditionalEntropy entropy_over_strata(std::vector<Stratum> strata, double pooled_p_f) {
  ConditionalEntropy result;
  double norm = 0.0;
  for (const Stratum& s : strata) norm += (s.name_weight / s.context_weight) * s.prior;
  if (norm <= 0.0) {
    result.bits = result.marginal_bits = entropy_bits(pooled_p_f);
    result.vacuous = true;
    return result;
  }
  double conditional = 0.0;
  double mixture_p = 0.0;
  for (const Stratum& s : strata) {
    const double posterior = (s.name_weight / s.context_weight) * s.prior / norm;
    conditional += posterior * entropy_bits(s.p_f);
    mixture_p += posterior * s.p_f;
  }
  result.bits = conditional;
  result.marginal_bits = entropy_bits(std::clamp(mixture_p, 0.0, 1.0));
  return result;
}

}  // namespace detail

// Expected entropy of the name's gender distribution after conditioning on
// country, decade, or both. Posterior over contexts comes from Bayes' rule:
// P(ctx | name) ~ P(name | ctx) * P(ctx), with P(name | ctx) the name's share
// of all observation weight in that context. Rows whose conditioning
// coordinate is the unknown sentinel are excluded from the strata.
inline ConditionalEntropy conditional_entropy(const NameKey& name, ConditionOn by,
                                              const NameTable& table,
                                              const TaxonomyParams& params = {}) {
  params.validate();
  const NameTable::NameRecord* rec = table.find(name);
  if (rec == nullptr) throw std::invalid_argument("name '" + name + "' not in table");

  const bool uniform = params.prior.empty();
  std::vector<detail::Stratum> strata;
  switch (by) {
    case ConditionOn::Country:
      for (const auto& [country, mass] : table.country_mass()) {
        auto it = rec->by_country.find(country);
        const double w = it == rec->by_country.end() ? 0.0 : it->second.total();
        if (w <= 0.0) continue;
        double prior = 1.0;
        if (!uniform) {
          auto p = params.prior.find(ContextKey{country, kUnknownDecade});
          prior = p == params.prior.end() ? 0.0 : p->second;
        }
        strata.push_back({w, mass, it->second.p_f(), prior});
      }
      break;
    case ConditionOn::Decade:
      for (const auto& [decade, mass] : table.decade_mass()) {
        auto it = rec->by_decade.find(decade);
        const double w = it == rec->by_decade.end() ? 0.0 : it->second.total();
        if (w <= 0.0) continue;
        double prior = 1.0;
        if (!uniform) {
          auto p = params.prior.find(ContextKey{std::string(kUnknownCountry), decade});
          prior = p == params.prior.end() ? 0.0 : p->second;
        }
        strata.push_back({w, mass, it->second.p_f(), prior});
      }
      break;
    case ConditionOn::CountryAndDecade:
      for (const auto& [ctx, mass] : table.joint_mass()) {
        auto it = rec->by_joint.find(ctx);
        const double w = it == rec->by_joint.end() ? 0.0 : it->second.total();
        if (w <= 0.0) continue;
        double prior = 1.0;
        if (!uniform) {
          auto p = params.prior.find(ctx);
          prior = p == params.prior.end() ? 0.0 : p->second;
        }
        strata.push_back({w, mass, it->second.p_f(), prior});
      }
      break;
  }
  return detail::entropy_over_strata(std::move(strata), rec->p_f_pooled());
}

struct TaxonAssignment {
  TaxonLabel label = TaxonLabel::NoData;
  std::optional<double> entropy;          // pooled, all contexts
  std::optional<double> entropy_country;  // only present when computed
  std::optional<double> entropy_decade;
  double total_weight = 0.0;
};

// Decision order: no data, then informativeness of the pooled distribution
// split by coverage, then country-conditional, then decade-conditional. A
// name conditionally gendered by both country and decade counts as country;
// one informative only under joint conditioning stays weakly gendered, so
// the joint entropy is never needed here.
inline TaxonAssignment assign_taxon(const NameKey& name, const NameTable& table,
                                    const TaxonomyParams& params = {}) {
  params.validate();
  TaxonAssignment out;
  const NameTable::NameRecord* rec = table.find(name);
  if (rec == nullptr) return out;

  out.total_weight = rec->total_weight();
  out.entropy = entropy_bits(rec->p_f_pooled());
  if (*out.entropy <= params.entropy_threshold) {
    out.label = out.total_weight >= params.coverage_threshold
                    ? TaxonLabel::GenderedHighCoverage
                    : TaxonLabel::GenderedLowCoverage;
    return out;
  }

  const ConditionalEntropy by_country = conditional_entropy(name, ConditionOn::Country, table, params);
  out.entropy_country = by_country.bits;
  if (!by_country.vacuous && by_country.bits <= params.entropy_threshold) {
    out.label = TaxonLabel::ConditionallyGenderedCountry;
    return out;
  }

  const ConditionalEntropy by_decade = conditional_entropy(name, ConditionOn::Decade, table, params);
  out.entropy_decade = by_decade.bits;
  if (!by_decade.vacuous && by_decade.bits <= params.entropy_threshold) {
    out.label = TaxonLabel::ConditionallyGenderedDecade;
    return out;
  }

  out.label = TaxonLabel::WeaklyGendered;
  return out;
}

}  // namespace nomen
