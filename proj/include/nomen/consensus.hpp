#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomen/corpus.hpp"
#include "nomen/tsv.hpp"

namespace nomen {

// Sparse binary reports x(n, m): 1 when source n reports name m as gendered
// female, 0 when gendered male, absent when the source has no report.
// Stored twice (name-major and source-major) so both EM steps stream their
// own axis.
struct ReportMatrix {
  struct Report {
    std::uint32_t index;  // source index in by_name, name index in by_source
    std::uint8_t x;
  };

  std::vector<std::string> source_ids;
  std::vector<NameKey> names;
  std::vector<std::vector<Report>> by_name;    // one row per name
  std::vector<std::vector<Report>> by_source;  // one row per source

  std::size_t n_sources() const { return source_ids.size(); }
  std::size_t n_names() const { return names.size(); }

  // Complement of every report; consensus and competences must transform as
  // z -> 1-z, c -> c.
  ReportMatrix flipped() const {
    ReportMatrix out = *this;
    for (auto& row : out.by_name)
      for (Report& r : row) r.x ^= 1;
    for (auto& row : out.by_source)
      for (Report& r : row) r.x ^= 1;
    return out;
  }
};

struct BinarizeResult {
  ReportMatrix matrix;
  // Names whose every per-source share was an exact tie, and sources left
  // with no usable report; both are dropped from the matrix.
  std::vector<NameKey> skipped_names;
  std::vector<std::string> skipped_sources;
};

// Thresholds each source's pooled female share per name at 1/2. An exact tie
// (within 1e-12) carries no directional report and is treated as missing.
inline BinarizeResult binarize_reports(const NameTable& table) {
  if (table.empty()) throw std::invalid_argument("empty name table");
  constexpr double kTieTolerance = 1e-12;

  BinarizeResult result;
  std::map<std::string, std::vector<std::pair<NameKey, std::uint8_t>>> per_source;
  std::map<NameKey, std::vector<std::pair<std::string, std::uint8_t>>> per_name;
  for (const auto& [name, rec] : table.names()) {
    for (const auto& [source, w] : rec.by_source) {
      const double p = w.p_f();
      if (std::abs(p - 0.5) <= kTieTolerance) continue;
      const std::uint8_t x = p > 0.5 ? 1 : 0;
      per_name[name].emplace_back(source, x);
      per_source[source].emplace_back(name, x);
    }
    if (per_name.find(name) == per_name.end()) result.skipped_names.push_back(name);
  }
  for (const std::string& id : table.source_ids())
    if (per_source.find(id) == per_source.end()) result.skipped_sources.push_back(id);

  ReportMatrix& m = result.matrix;
  std::map<std::string, std::uint32_t> source_index;
  for (const auto& [id, reports] : per_source) {
    source_index[id] = static_cast<std::uint32_t>(m.source_ids.size());
    m.source_ids.push_back(id);
  }
  std::map<NameKey, std::uint32_t> name_index;
  for (const auto& [name, reports] : per_name) {
    name_index[name] = static_cast<std::uint32_t>(m.names.size());
    m.names.push_back(name);
  }
  m.by_name.resize(m.names.size());
  m.by_source.resize(m.source_ids.size());
  for (const auto& [name, reports] : per_name) {
    auto& row = m.by_name[name_index[name]];
    for (const auto& [source, x] : reports) row.push_back({source_index[source], x});
  }
  for (const auto& [source, reports] : per_source) {
    auto& row = m.by_source[source_index[source]];
    for (const auto& [name, x] : reports) row.push_back({name_index[name], x});
  }
  return result;
}

namespace detail {

// Sums after sorting, so the result depends only on the multiset of terms,
// not on the order reports were stored in. This is what makes the EM fixed
// point bit-identical under source/name permutations and label flips.
inline double sorted_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

// Splits posterior mass so that a value and its complement are exact FP
// complements of each other: hi = fl(1-r) with r in [0, 1/2], and
// lo = 1 - hi is exact by Sterbenz. Then 1-hi == lo and 1-lo == hi hold
// bit-for-bit, which the label-flip symmetry relies on.
inline double posterior_from_log_odds(double log_female, double log_male) {
  const double d = log_female - log_male;
  const double minority = 1.0 / (1.0 + std::exp(std::abs(d)));
  const double hi = 1.0 - minority;
  const double lo = 1.0 - hi;
  return d >= 0.0 ? hi : lo;
}

}  // namespace detail

// E-step: posterior that each name's consensus is "female" given reports and
// competences, with the product running over only the sources reporting it.
// Evaluated in log space; competences are clamped to [1e-9, 1-1e-9] so a
// saturated competence cannot produce log(0).
inline std::vector<double> cct_expectation(const ReportMatrix& m, std::span<const double> c) {
  if (c.size() != m.n_sources()) throw std::invalid_argument("competence size mismatch");
  constexpr double kClamp = 1e-9;
  std::vector<double> log_c(c.size()), log_not_c(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double cc = std::clamp(c[n], kClamp, 1.0 - kClamp);
    log_c[n] = std::log(cc);
    log_not_c[n] = std::log1p(-cc);
  }

  std::vector<double> z(m.n_names());
  std::vector<double> female_terms, male_terms;
  for (std::size_t i = 0; i < m.n_names(); ++i) {
    female_terms.clear();
    male_terms.clear();
    for (const ReportMatrix::Report& r : m.by_name[i]) {
      if (r.x) {
        female_terms.push_back(log_c[r.index]);
        male_terms.push_back(log_not_c[r.index]);
      } else {
        female_terms.push_back(log_not_c[r.index]);
        male_terms.push_back(log_c[r.index]);
      }
    }
    z[i] = detail::posterior_from_log_odds(detail::sorted_sum(female_terms),
                                           detail::sorted_sum(male_terms));
  }
  return z;
}

// M-step: each source's mean agreement with the current consensus, averaged
// over the names that source actually reports.
inline std::vector<double> cct_maximization(const ReportMatrix& m, std::span<const double> z) {
  if (z.size() != m.n_names()) throw std::invalid_argument("consensus size mismatch");
  std::vector<double> c(m.n_sources());
  std::vector<double> terms;
  for (std::size_t n = 0; n < m.n_sources(); ++n) {
    terms.clear();
    for (const ReportMatrix::Report& r : m.by_source[n])
      terms.push_back(r.x ? z[r.index] : 1.0 - z[r.index]);
    c[n] = detail::sorted_sum(terms) / static_cast<double>(terms.size());
  }
  return c;
}

struct CctOptions {
  double c0 = 0.9;      // initial competence, must lie in (0.5, 1)
  double tol = 1e-8;    // max-norm stopping rule on both z and c
  int max_iter = 500;
};

struct ConsensusFit {
  std::vector<double> z;  // per name, aligned with ReportMatrix::names
  std::vector<double> c;  // per source, aligned with ReportMatrix::source_ids
  int iterations = 0;
  bool converged = false;
};

// Alternates expectation and maximization with synchronous updates until
// neither vector moves more than tol. Deterministic for fixed inputs.
inline ConsensusFit cct_fit(const ReportMatrix& m, CctOptions opts = {}) {
  if (!(opts.c0 > 0.5 && opts.c0 < 1.0))
    throw std::invalid_argument("initial competence must be in (0.5, 1)");
  if (m.n_names() == 0 || m.n_sources() == 0) throw std::invalid_argument("empty report matrix");
  for (std::size_t i = 0; i < m.n_names(); ++i)
    if (m.by_name[i].empty()) throw std::invalid_argument("name without reports");
  for (std::size_t n = 0; n < m.n_sources(); ++n)
    if (m.by_source[n].empty()) throw std::invalid_argument("source without reports");

  ConsensusFit fit;
  fit.c.assign(m.n_sources(), opts.c0);
  fit.z = cct_expectation(m, fit.c);

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    const std::vector<double> c_next = cct_maximization(m, fit.z);
    const std::vector<double> z_next = cct_expectation(m, c_next);

    double delta = 0.0;
    for (std::size_t n = 0; n < c_next.size(); ++n)
      delta = std::max(delta, std::abs(c_next[n] - fit.c[n]));
    for (std::size_t i = 0; i < z_next.size(); ++i)
      delta = std::max(delta, std::abs(z_next[i] - fit.z[i]));

    fit.c = c_next;
    fit.z = z_next;
    fit.iterations = iter;
    if (delta < opts.tol) {
      fit.converged = true;
      break;
    }
  }
  return fit;
}

// Synthetic panel with planted competences and consensus: every source
// reports every name, agreeing with the planted consensus with its planted
// probability. Uses a fixed bit-level Bernoulli so matrices are reproducible
// across platforms for a given seed.
inline ReportMatrix synth_generate(std::size_t n_sources, std::size_t n_names,
                                   std::span<const double> c_true,
                                   std::span<const std::uint8_t> z_true, std::uint64_t seed) {
  if (c_true.size() != n_sources) throw std::invalid_argument("c_true size mismatch");
  if (z_true.size() != n_names) throw std::invalid_argument("z_true size mismatch");
  for (double c : c_true)
    if (!(c > 0.5 && c <= 1.0)) throw std::invalid_argument("planted competence outside (0.5, 1]");
  for (std::uint8_t z : z_true)
    if (z > 1) throw std::invalid_argument("planted consensus must be binary");

  ReportMatrix m;
  m.source_ids.resize(n_sources);
  m.names.resize(n_names);
  for (std::size_t n = 0; n < n_sources; ++n) m.source_ids[n] = "s" + std::to_string(n);
  for (std::size_t i = 0; i < n_names; ++i) m.names[i] = "name" + std::to_string(i);
  m.by_name.resize(n_names);
  m.by_source.resize(n_sources);

  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < n_sources; ++n) {
    for (std::size_t i = 0; i < n_names; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const std::uint8_t x = u < c_true[n] ? z_true[i] : static_cast<std::uint8_t>(1 - z_true[i]);
      m.by_name[i].push_back({static_cast<std::uint32_t>(n), x});
      m.by_source[n].push_back({static_cast<std::uint32_t>(i), x});
    }
  }
  return m;
}

// competences.tsv: (source_id, c); consensus.tsv: (name, z). 12 significant
// digits, enough to round-trip the published numbers exactly at that
// precision.
inline void write_fit(const ConsensusFit& fit, const ReportMatrix& m,
                      const std::string& out_prefix) {
  TsvWriter comp(out_prefix + "competences.tsv");
  comp.row({"source_id", "c"});
  for (std::size_t n = 0; n < m.n_sources(); ++n)
    comp.row({m.source_ids[n], format_double(fit.c[n], 12)});
  comp.close();

  TsvWriter cons(out_prefix + "consensus.tsv");
  cons.row({"name", "z"});
  for (std::size_t i = 0; i < m.n_names(); ++i)
    cons.row({m.names[i], format_double(fit.z[i], 12)});
  cons.close();
}

// The equal-competence baseline: unweighted mean over sources of each
// source's pooled female share. Computed through share_margin so the mean
// margin negates exactly when every source's weights are swapped.
inline double average_share_margin(const NameTable::NameRecord& rec) {
  double sum = 0.0;
  for (const auto& [source, w] : rec.by_source) sum += share_margin(w);
  return sum / static_cast<double>(rec.by_source.size());
}

inline std::map<NameKey, double> average_consensus(const NameTable& table) {
  if (table.empty()) throw std::invalid_argument("empty name table");
  std::map<NameKey, double> out;
  for (const auto& [name, rec] : table.names()) out[name] = 0.5 + average_share_margin(rec);
  return out;
}

struct FitTables {
  std::map<std::string, double> competences;
  std::map<NameKey, double> consensus;
};

inline FitTables read_fit(const std::string& out_prefix) {
  FitTables tables;
  {
    TsvReader reader(out_prefix + "competences.tsv");
    std::vector<std::string> fields;
    if (!reader.next(fields) || fields.size() != 2) reader.fail("bad competences header");
    while (reader.next(fields)) {
      if (fields.size() != 2) reader.fail("expected 2 columns");
      double c = 0.0;
      if (!parse_double(fields[1], c)) reader.fail("unparsable competence");
      tables.competences[fields[0]] = c;
    }
  }
  {
    TsvReader reader(out_prefix + "consensus.tsv");
    std::vector<std::string> fields;
    if (!reader.next(fields) || fields.size() != 2) reader.fail("bad consensus header");
    while (reader.next(fields)) {
      if (fields.size() != 2) reader.fail("expected 2 columns");
      double z = 0.0;
      if (!parse_double(fields[1], z)) reader.fail("unparsable consensus value");
      tables.consensus[fields[0]] = z;
    }
  }
  return tables;
}

}  // namespace nomen
