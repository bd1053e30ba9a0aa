#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nomen/consensus.hpp"
#include "nomen/corpus.hpp"
#include "nomen/taxonomy.hpp"

namespace nomen {

enum class GenderLabel { Female, Male, Unclassified };

inline std::string_view to_string(GenderLabel label) {
  switch (label) {
    case GenderLabel::Female: return "female";
    case GenderLabel::Male: return "male";
    case GenderLabel::Unclassified: return "unclassified";
  }
  return "?";
}

inline std::optional<GenderLabel> parse_gender_label(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "f" || lower == "female") return GenderLabel::Female;
  if (lower == "m" || lower == "male") return GenderLabel::Male;
  if (lower == "u" || lower == "unclassified") return GenderLabel::Unclassified;
  return std::nullopt;
}

struct Basis {
  enum class Kind { Average, Cct, CountryConditioned, DecadeConditioned, MajorityGuess };

  Kind kind = Kind::Average;
  std::vector<std::string> countries;
  std::vector<int> decades;
  bool fallback = false;  // conditioning pool was empty; global result used

  std::string str() const {
    std::string out;
    switch (kind) {
      case Kind::Average: out = "average"; break;
      case Kind::Cct: out = "cct"; break;
      case Kind::MajorityGuess: out = "majority"; break;
      case Kind::CountryConditioned: {
        out = "country(";
        for (std::size_t i = 0; i < countries.size(); ++i) {
          if (i) out += '+';
          out += countries[i];
        }
        out += ')';
        break;
      }
      case Kind::DecadeConditioned: {
        out = "decade(";
        for (std::size_t i = 0; i < decades.size(); ++i) {
          if (i) out += '+';
          out += std::to_string(decades[i]);
        }
        out += ')';
        break;
      }
    }
    if (fallback) out += "|fallback:average";
    return out;
  }
};

struct Classification {
  GenderLabel label = GenderLabel::Unclassified;
  std::optional<double> p_f;
  std::optional<NameKey> normalized;
  Basis basis;
  TaxonAssignment taxon;
};

// Point estimates keyed by NameKey: either the simple average consensus or a
// fitted CCT consensus. Names without an estimate classify as Unclassified.
// Estimates are carried as margins (p_f - 1/2) because the margin is the
// quantity whose sign flips exactly under female/male relabeling.
class Estimator {
 public:
  static Estimator average(const NameTable& table) {
    Estimator e;
    e.kind_ = Basis::Kind::Average;
    for (const auto& [name, rec] : table.names()) e.margin_[name] = average_share_margin(rec);
    return e;
  }

  static Estimator cct(const ReportMatrix& matrix, const ConsensusFit& fit) {
    if (fit.z.size() != matrix.n_names()) throw std::invalid_argument("fit/matrix mismatch");
    Estimator e;
    e.kind_ = Basis::Kind::Cct;
    // z - 1/2 is exact on both sides of the fit's complement pairs
    for (std::size_t i = 0; i < matrix.n_names(); ++i)
      e.margin_[matrix.names[i]] = fit.z[i] - 0.5;
    return e;
  }

  std::optional<double> margin(const NameKey& name) const {
    auto it = margin_.find(name);
    if (it == margin_.end()) return std::nullopt;
    return it->second;
  }

  Basis::Kind kind() const { return kind_; }

 private:
  Basis::Kind kind_ = Basis::Kind::Average;
  std::map<NameKey, double> margin_;
};

namespace detail {

inline GenderLabel threshold_label(double margin, double band) {
  if (margin > band) return GenderLabel::Female;
  if (margin < -band) return GenderLabel::Male;
  return GenderLabel::Unclassified;
}

}  // namespace detail

// Thresholds the estimator's probability with an abstention band of the
// given half-width around 1/2 and attaches the taxonomy leaf. Band 0 means
// abstention only at exactly 1/2 or when there is no estimate at all.
inline Classification classify(std::string_view raw, const NameTable& table,
                               const Estimator& estimator, double band = 0.0,
                               const TaxonomyParams& params = {}) {
  if (band < 0.0) throw std::invalid_argument("band must be nonnegative");
  Classification out;
  out.basis.kind = estimator.kind();
  std::optional<NameKey> key = normalize_name(raw);
  if (!key) return out;
  out.normalized = *key;
  out.taxon = assign_taxon(*key, table, params);
  if (std::optional<double> margin = estimator.margin(*key)) {
    out.p_f = 0.5 + *margin;
    out.label = detail::threshold_label(*margin, band);
  }
  return out;
}

namespace detail {

// Source-averaged margin over the name's observations restricted by the
// given predicate; nullopt when the restricted pool is empty.
template <typename ContextPredicate>
std::optional<double> restricted_margin(const NameTable::NameRecord& rec, ContextPredicate keep) {
  std::map<std::string, Weights> by_source;
  for (const NameTable::Observation& obs : rec.observations)
    if (keep(obs.ctx)) by_source[obs.source] += obs.w;
  if (by_source.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& [source, w] : by_source) sum += share_margin(w);
  return sum / static_cast<double>(by_source.size());
}

}  // namespace detail

// Classifies using only reference data whose country lies in the supplied
// set (pooled over the set). Falls back to the global average estimate,
// flagged, when the name has no data in any of those countries. The unknown
// sentinel "--" is a legal member, so passing every observed country
// (sentinel included) restricts nothing and reproduces the global result.
inline Classification classify_conditioned(std::string_view raw,
                                           std::span<const std::string> countries,
                                           const NameTable& table, double band = 0.0,
                                           const TaxonomyParams& params = {}) {
  if (countries.empty()) throw std::invalid_argument("country list must be nonempty");
  for (const std::string& c : countries)
    if (!detail::valid_country(c))
      throw std::invalid_argument("'" + c + "' is not an alpha-2 code or '--'");
  if (band < 0.0) throw std::invalid_argument("band must be nonnegative");

  Classification out;
  out.basis.kind = Basis::Kind::CountryConditioned;
  out.basis.countries.assign(countries.begin(), countries.end());
  std::optional<NameKey> key = normalize_name(raw);
  if (!key) return out;
  out.normalized = *key;
  out.taxon = assign_taxon(*key, table, params);

  const NameTable::NameRecord* rec = table.find(*key);
  if (rec == nullptr) return out;

  auto in_set = [&](const ContextKey& ctx) {
    return std::find(countries.begin(), countries.end(), ctx.country) != countries.end();
  };
  std::optional<double> margin = detail::restricted_margin(*rec, in_set);
  if (!margin) {
    // Empty pool: reuse the unrestricted average estimate.
    margin = detail::restricted_margin(*rec, [](const ContextKey&) { return true; });
    out.basis.fallback = true;
  }
  if (margin) {
    out.p_f = 0.5 + *margin;
    out.label = detail::threshold_label(*margin, band);
  }
  return out;
}

// Decade analogue of classify_conditioned, with -1 admitting unknown-decade
// rows into the pool.
inline Classification classify_conditioned_decades(std::string_view raw,
                                                   std::span<const int> decades,
                                                   const NameTable& table, double band = 0.0,
                                                   const TaxonomyParams& params = {}) {
  if (decades.empty()) throw std::invalid_argument("decade list must be nonempty");
  if (band < 0.0) throw std::invalid_argument("band must be nonnegative");

  Classification out;
  out.basis.kind = Basis::Kind::DecadeConditioned;
  out.basis.decades.assign(decades.begin(), decades.end());
  std::optional<NameKey> key = normalize_name(raw);
  if (!key) return out;
  out.normalized = *key;
  out.taxon = assign_taxon(*key, table, params);

  const NameTable::NameRecord* rec = table.find(*key);
  if (rec == nullptr) return out;

  auto in_set = [&](const ContextKey& ctx) {
    return std::find(decades.begin(), decades.end(), ctx.decade) != decades.end();
  };
  std::optional<double> margin = detail::restricted_margin(*rec, in_set);
  if (!margin) {
    margin = detail::restricted_margin(*rec, [](const ContextKey&) { return true; });
    out.basis.fallback = true;
  }
  if (margin) {
    out.p_f = 0.5 + *margin;
    out.label = detail::threshold_label(*margin, band);
  }
  return out;
}

struct ClassCounts {
  std::size_t female = 0;
  std::size_t male = 0;
};

// Constant classifier assigning every input the majority class of the counts
// it was built from; a tie abstains.
class MajorityGuesser {
 public:
  explicit MajorityGuesser(ClassCounts counts) : counts_(counts) {
    if (counts.female == 0 && counts.male == 0)
      throw std::invalid_argument("at least one class count must be positive");
  }

  Classification operator()(std::string_view raw, const NameTable& table,
                            const TaxonomyParams& params = {}) const {
    Classification out;
    out.basis.kind = Basis::Kind::MajorityGuess;
    if (counts_.female > counts_.male) out.label = GenderLabel::Female;
    else if (counts_.male > counts_.female) out.label = GenderLabel::Male;
    std::optional<NameKey> key = normalize_name(raw);
    if (key) {
      out.normalized = *key;
      out.taxon = assign_taxon(*key, table, params);
    }
    return out;
  }

 private:
  ClassCounts counts_;
};

inline MajorityGuesser guess_majority(ClassCounts counts) { return MajorityGuesser(counts); }

}  // namespace nomen
