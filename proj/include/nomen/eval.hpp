#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomen/classify.hpp"
#include "nomen/consensus.hpp"
#include "nomen/corpus.hpp"
#include "nomen/tsv.hpp"

namespace nomen {

struct LabeledRow {
  std::string raw_name;
  GenderLabel label = GenderLabel::Unclassified;  // always Female or Male
  std::string country;                            // optional hint, may be empty
};

using LabeledSample = std::vector<LabeledRow>;

// TSV columns: name, label[, country]. Labels accept f/m/female/male in any
// case; anything else is an error, the sample is binary by construction.
inline LabeledSample read_labeled_sample(const std::string& path) {
  TsvReader reader(path);
  std::vector<std::string> fields;
  if (!reader.next(fields)) reader.fail("empty file");
  if (fields.size() != 2 && fields.size() != 3)
    reader.fail("header must have 2 or 3 columns (name label [country])");
  const std::size_t width = fields.size();

  LabeledSample sample;
  while (reader.next(fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != width)
      reader.fail("expected " + std::to_string(width) + " columns, got " +
                  std::to_string(fields.size()));
    LabeledRow row;
    row.raw_name = fields[0];
    std::optional<GenderLabel> label = parse_gender_label(fields[1]);
    if (!label || *label == GenderLabel::Unclassified)
      reader.fail("label '" + fields[1] + "' is not female/male");
    row.label = *label;
    if (width == 3) row.country = fields[2];
    sample.push_back(std::move(row));
  }
  if (sample.empty()) reader.fail("no data rows");
  return sample;
}

struct TaxonStats {
  std::size_t count = 0;
  std::size_t classified = 0;
  std::size_t matches = 0;

  double coverage() const { return count ? static_cast<double>(classified) / count : 0.0; }
  std::optional<double> correspondence() const {
    if (classified == 0) return std::nullopt;
    return static_cast<double>(matches) / static_cast<double>(classified);
  }
};

struct EvalReport {
  std::size_t n = 0;
  std::size_t n_classified = 0;
  std::size_t n_matches = 0;
  double coverage = 0.0;
  std::optional<double> correspondence;  // absent when nothing was classified
  std::map<TaxonLabel, TaxonStats> per_taxon;

  // Misclassification by validation class, among classified rows of that class.
  std::size_t classified_female = 0, misclassified_female = 0;
  std::size_t classified_male = 0, misclassified_male = 0;
  // Signed difference in misclassified counts (female minus male); zero iff
  // the composition estimate is unbiased.
  long long bias_error = 0;
  std::optional<double> composition_estimate;  // male share among classified
  double composition_target = 0.0;             // male share among all rows

  std::optional<double> misrate_female() const {
    if (classified_female == 0) return std::nullopt;
    return static_cast<double>(misclassified_female) / static_cast<double>(classified_female);
  }
  std::optional<double> misrate_male() const {
    if (classified_male == 0) return std::nullopt;
    return static_cast<double>(misclassified_male) / static_cast<double>(classified_male);
  }
};

inline bool is_match(const Classification& pred, const LabeledRow& row) {
  return pred.label != GenderLabel::Unclassified && pred.label == row.label;
}

// Correspondence counts matches among classified rows only; coverage is the
// share of rows classified at all.
inline EvalReport evaluate(std::span<const Classification> preds, const LabeledSample& sample) {
  if (preds.size() != sample.size())
    throw std::invalid_argument("predictions must cover every sample row");
  if (sample.empty()) throw std::invalid_argument("empty sample");

  EvalReport report;
  report.n = sample.size();
  std::size_t male_rows = 0;
  std::size_t male_predictions = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Classification& pred = preds[i];
    const LabeledRow& row = sample[i];
    const bool classified = pred.label != GenderLabel::Unclassified;
    const bool match = is_match(pred, row);

    TaxonStats& taxon = report.per_taxon[pred.taxon.label];
    ++taxon.count;
    if (row.label == GenderLabel::Male) ++male_rows;
    if (classified) {
      ++report.n_classified;
      ++taxon.classified;
      if (pred.label == GenderLabel::Male) ++male_predictions;
      if (row.label == GenderLabel::Female) {
        ++report.classified_female;
        if (!match) ++report.misclassified_female;
      } else {
        ++report.classified_male;
        if (!match) ++report.misclassified_male;
      }
    }
    if (match) {
      ++report.n_matches;
      ++taxon.matches;
    }
  }
  report.coverage = static_cast<double>(report.n_classified) / static_cast<double>(report.n);
  if (report.n_classified > 0)
    report.correspondence =
        static_cast<double>(report.n_matches) / static_cast<double>(report.n_classified);
  report.bias_error = static_cast<long long>(report.misclassified_female) -
                      static_cast<long long>(report.misclassified_male);
  if (report.n_classified > 0)
    report.composition_estimate =
        static_cast<double>(male_predictions) / static_cast<double>(report.n_classified);
  report.composition_target = static_cast<double>(male_rows) / static_cast<double>(report.n);
  return report;
}

struct CalibrationBand {
  double lo = 0.5, hi = 1.0;      // strength interval covered by this band
  std::size_t count = 0;
  std::size_t matches = 0;
  double mean_strength = 0.0;
  double correspondence = 0.0;
  double expected = 0.0;          // Bayes ceiling: mean strength of the band
  double expected_se = 0.0;       // binomial standard error of the ceiling
};

struct CalibrationReport {
  std::vector<CalibrationBand> bands;  // empty bands omitted
  // Rows whose (normalized) names were held out, tabulated separately.
  std::size_t holdout_count = 0;
  std::size_t holdout_matches = 0;
  // Classified rows with no reference estimate (e.g. majority guesses on
  // unseen names); they belong to no band.
  std::size_t no_reference = 0;
};

// Groups classified rows into n_bands quantile bands of reference strength
// s = max(p_f, 1 - p_f) taken from the average consensus, and compares each
// band's correspondence with the ceiling the reference data itself implies.
inline CalibrationReport calibration_bands(std::span<const Classification> preds,
                                           const LabeledSample& sample, const NameTable& table,
                                           int n_bands = 5,
                                           std::span<const NameKey> holdouts = {}) {
  if (preds.size() != sample.size())
    throw std::invalid_argument("predictions must cover every sample row");
  if (n_bands < 1) throw std::invalid_argument("n_bands must be positive");

  const std::map<NameKey, double> reference = average_consensus(table);
  CalibrationReport report;

  struct RowInfo {
    double strength;
    bool match;
  };
  std::vector<RowInfo> rows;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const Classification& pred = preds[i];
    if (pred.label == GenderLabel::Unclassified) continue;
    const bool match = is_match(pred, sample[i]);
    if (pred.normalized &&
        std::find(holdouts.begin(), holdouts.end(), *pred.normalized) != holdouts.end()) {
      ++report.holdout_count;
      if (match) ++report.holdout_matches;
      continue;
    }
    std::optional<double> p;
    if (pred.normalized) {
      auto it = reference.find(*pred.normalized);
      if (it != reference.end()) p = it->second;
    }
    if (!p) {
      ++report.no_reference;
      continue;
    }
    rows.push_back({std::max(*p, 1.0 - *p), match});
  }
  if (rows.empty()) return report;

  // Quantile edges over the observed strengths; degenerate edges collapse to
  // empty bands, which are dropped.
  std::vector<double> sorted_strengths;
  sorted_strengths.reserve(rows.size());
  for (const RowInfo& r : rows) sorted_strengths.push_back(r.strength);
  std::sort(sorted_strengths.begin(), sorted_strengths.end());
  std::vector<double> edges;  // band b covers [edges[b], edges[b+1]]
  edges.push_back(0.5);
  for (int b = 1; b < n_bands; ++b) {
    const std::size_t idx = rows.size() * static_cast<std::size_t>(b) / n_bands;
    edges.push_back(sorted_strengths[std::min(idx, rows.size() - 1)]);
  }
  edges.push_back(1.0);

  std::vector<CalibrationBand> bands(static_cast<std::size_t>(n_bands));
  std::vector<double> var_sum(static_cast<std::size_t>(n_bands), 0.0);
  for (std::size_t b = 0; b < bands.size(); ++b) {
    bands[b].lo = edges[b];
    bands[b].hi = edges[b + 1];
  }
  for (const RowInfo& r : rows) {
    // upper_bound puts a strength equal to an interior edge into the higher band
    std::size_t b = static_cast<std::size_t>(
        std::upper_bound(edges.begin() + 1, edges.end() - 1, r.strength) - (edges.begin() + 1));
    CalibrationBand& band = bands[b];
    ++band.count;
    if (r.match) ++band.matches;
    band.mean_strength += r.strength;
    var_sum[b] += r.strength * (1.0 - r.strength);
  }
  for (std::size_t b = 0; b < bands.size(); ++b) {
    CalibrationBand& band = bands[b];
    if (band.count == 0) continue;
    const double count = static_cast<double>(band.count);
    band.mean_strength /= count;
    band.correspondence = static_cast<double>(band.matches) / count;
    band.expected = band.mean_strength;
    band.expected_se = std::sqrt(var_sum[b]) / count;
    report.bands.push_back(band);
  }
  return report;
}

struct PairedDiff {
  double diff = 0.0;  // observed (# matches by B) - (# matches by A)
  double ci_low = 0.0;
  double ci_high = 0.0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Resample r draws from mt19937_64 seeded with substream_seed(seed, r);
// indices come from the 128-bit multiply-shift bounded reduction. Both are
// pinned here so runs reproduce across platforms and so resamples stay
// independent of execution order.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t resample) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (resample + 1));
}

inline std::size_t bounded_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(rng()) * static_cast<unsigned __int128>(n)) >> 64);
}

}  // namespace detail

// Percentile bootstrap over rows (individuals) of the paired difference in
// matched counts. The statistic for each resample of n rows drawn with
// replacement is sum(matches_b) - sum(matches_a); the interval takes the
// mirrored order statistics at floor(0.025 R) from each end.
inline PairedDiff bootstrap_paired_diff(std::span<const std::uint8_t> matches_a,
                                        std::span<const std::uint8_t> matches_b,
                                        std::size_t resamples, std::uint64_t seed) {
  if (matches_a.size() != matches_b.size())
    throw std::invalid_argument("paired match vectors differ in length");
  if (matches_a.empty()) throw std::invalid_argument("empty sample");
  if (resamples < 100) throw std::invalid_argument("needs at least 100 resamples");

  const std::size_t n = matches_a.size();
  std::vector<std::int64_t> advantage(n);
  std::int64_t observed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    advantage[i] = static_cast<std::int64_t>(matches_b[i]) - static_cast<std::int64_t>(matches_a[i]);
    observed += advantage[i];
  }

  std::vector<std::int64_t> stats(resamples);
  for (std::size_t r = 0; r < resamples; ++r) {
    std::mt19937_64 rng(detail::substream_seed(seed, r));
    std::int64_t stat = 0;
    for (std::size_t i = 0; i < n; ++i) stat += advantage[detail::bounded_index(rng, n)];
    stats[r] = stat;
  }
  std::sort(stats.begin(), stats.end());

  const std::size_t k = static_cast<std::size_t>(0.025 * static_cast<double>(resamples));
  PairedDiff out;
  out.diff = static_cast<double>(observed);
  out.ci_low = static_cast<double>(stats[k]);
  out.ci_high = static_cast<double>(stats[resamples - 1 - k]);
  return out;
}

inline PairedDiff bootstrap_paired_diff(std::span<const Classification> preds_a,
                                        std::span<const Classification> preds_b,
                                        const LabeledSample& sample, std::size_t resamples = 10000,
                                        std::uint64_t seed = 0) {
  if (preds_a.size() != sample.size() || preds_b.size() != sample.size())
    throw std::invalid_argument("predictions must cover every sample row");
  std::vector<std::uint8_t> ma(sample.size()), mb(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    ma[i] = is_match(preds_a[i], sample[i]) ? 1 : 0;
    mb[i] = is_match(preds_b[i], sample[i]) ? 1 : 0;
  }
  return bootstrap_paired_diff(std::span<const std::uint8_t>(ma),
                               std::span<const std::uint8_t>(mb), resamples, seed);
}

}  // namespace nomen
