#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nomen/normalize.hpp"
#include "nomen/tsv.hpp"

namespace nomen {

inline constexpr std::string_view kUnknownCountry = "--";
inline constexpr int kUnknownDecade = -1;

struct DecadeRange {
  int min = 1600;
  int max = 2020;
};

// (country, decade) context of an observation. "--" / -1 mark the
// corresponding coordinate as unknown.
struct ContextKey {
  std::string country = std::string(kUnknownCountry);
  int decade = kUnknownDecade;

  bool has_country() const { return country != kUnknownCountry; }
  bool has_decade() const { return decade != kUnknownDecade; }

  auto operator<=>(const ContextKey&) const = default;
};

struct Weights {
  double f = 0.0;
  double m = 0.0;

  double total() const { return f + m; }
  double p_f() const { return f / (f + m); }

  Weights& operator+=(const Weights& o) {
    f += o.f;
    m += o.m;
    return *this;
  }
};

// Signed female share margin, p_f - 1/2, built so that swapping f and m
// negates the result bit-for-bit: the minority ratio r lies in [0, 1/2],
// hi = fl(1-r) and hi - 1/2 are exact by Sterbenz, and the minority-side
// margin is the exact negation of the majority-side one. Classification
// decisions ride on this margin, which is what makes the swap-all-weights
// symmetry exact rather than approximate.
inline double share_margin(const Weights& w) {
  const double minority = std::min(w.f, w.m) / w.total();
  const double hi = 1.0 - minority;
  const double margin = hi - 0.5;
  return w.f >= w.m ? margin : -margin;
}

// One reference source's observation weights per (name, context).
struct SourceTable {
  std::string source_id;
  std::map<std::pair<NameKey, ContextKey>, Weights> entries;
  bool stratified = false;
  // Set when poststratify was a no-op because one group was entirely absent.
  bool stratify_skipped = false;
  std::size_t rows_skipped = 0;  // rows whose name normalized to NoName

  Weights totals() const {
    Weights t;
    for (const auto& [key, w] : entries) t += w;
    return t;
  }
};

namespace detail {

inline bool valid_country(std::string_view s) {
  if (s == kUnknownCountry) return true;
  return s.size() == 2 && s[0] >= 'A' && s[0] <= 'Z' && s[1] >= 'A' && s[1] <= 'Z';
}

}  // namespace detail

// Reads one standardized reference file. Columns (after a header row):
// name, decade ('-' for unknown), country ('--' for unknown), wf, wm.
// Rows with an unusable name are counted and skipped; duplicate
// (name, context) rows are summed.
inline SourceTable ingest_source(const std::string& path, const std::string& source_id,
                                 DecadeRange decades = {}) {
  if (source_id.empty()) throw std::invalid_argument("source_id must be nonempty");
  SourceTable table;
  table.source_id = source_id;

  TsvReader reader(path);
  std::vector<std::string> fields;
  if (!reader.next(fields)) reader.fail("empty file");
  if (fields.size() != 5) reader.fail("header must have 5 columns (name decade country wf wm)");

  std::size_t data_rows = 0;
  while (reader.next(fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // ignore blank line
    if (fields.size() != 5)
      reader.fail("expected 5 columns, got " + std::to_string(fields.size()));
    ++data_rows;

    ContextKey ctx;
    if (fields[1] != "-") {
      long decade = 0;
      if (!parse_int(fields[1], decade)) reader.fail("unparsable decade '" + fields[1] + "'");
      if (decade % 10 != 0 || decade < decades.min || decade > decades.max)
        reader.fail("decade " + fields[1] + " is not a multiple of 10 in [" +
                    std::to_string(decades.min) + ", " + std::to_string(decades.max) + "]");
      ctx.decade = static_cast<int>(decade);
    }
    if (!detail::valid_country(fields[2]))
      reader.fail("country '" + fields[2] + "' is not an alpha-2 code or '--'");
    ctx.country = fields[2];

    Weights w;
    if (!parse_double(fields[3], w.f)) reader.fail("unparsable weight '" + fields[3] + "'");
    if (!parse_double(fields[4], w.m)) reader.fail("unparsable weight '" + fields[4] + "'");
    if (w.f < 0 || w.m < 0) reader.fail("negative weight");
    if (w.total() <= 0) reader.fail("row has zero total weight");

    std::optional<NameKey> key = normalize_name(fields[0]);
    if (!key) {
      ++table.rows_skipped;
      continue;
    }
    table.entries[{*key, ctx}] += w;
  }
  if (data_rows == 0) reader.fail("no data rows");
  return table;
}

// Equalizes the source's female and male observation totals by upweighting
// the underrepresented group. Per-name proportions within a group are a
// single monotone scaling, so their order is preserved.
inline SourceTable poststratify(SourceTable table) {
  if (table.stratified) throw std::logic_error(table.source_id + ": already stratified");
  Weights totals = table.totals();
  if (totals.f == 0.0 || totals.m == 0.0) {
    table.stratified = true;
    table.stratify_skipped = true;  // scaling undefined with one group absent
    return table;
  }
  if (totals.f < totals.m) {
    const double scale = totals.m / totals.f;
    for (auto& [key, w] : table.entries) w.f *= scale;
  } else if (totals.m < totals.f) {
    const double scale = totals.f / totals.m;
    for (auto& [key, w] : table.entries) w.m *= scale;
  }
  table.stratified = true;
  return table;
}

// Aggregated, immutable view over all sources, keyed by NameKey.
class NameTable {
 public:
  struct Observation {
    std::string source;
    ContextKey ctx;
    Weights w;
  };

  struct NameRecord {
    std::vector<Observation> observations;  // sorted by (source, country, decade)
    Weights total;                          // all contexts, sentinels included
    std::map<std::string, Weights> by_source;
    std::map<std::string, Weights> by_country;  // known countries only
    std::map<int, Weights> by_decade;           // known decades only
    std::map<ContextKey, Weights> by_joint;     // both coordinates known

    double total_weight() const { return total.total(); }
    double p_f_pooled() const { return total.p_f(); }
  };

  const NameRecord* find(const NameKey& name) const {
    auto it = names_.find(name);
    return it == names_.end() ? nullptr : &it->second;
  }

  const std::map<NameKey, NameRecord>& names() const { return names_; }
  const std::vector<std::string>& source_ids() const { return source_ids_; }

  // Corpus-wide mass per known context, the P(name | context) denominators.
  const std::map<std::string, double>& country_mass() const { return country_mass_; }
  const std::map<int, double>& decade_mass() const { return decade_mass_; }
  const std::map<ContextKey, double>& joint_mass() const { return joint_mass_; }

  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }

  void write_tsv(const std::string& path) const {
    TsvWriter out(path);
    out.row({"name", "source_id", "country", "decade", "wf", "wm"});
    for (const auto& [name, rec] : names_) {
      for (const Observation& obs : rec.observations) {
        out.row({name, obs.source, obs.ctx.country,
                 obs.ctx.has_decade() ? std::to_string(obs.ctx.decade) : "-",
                 format_double(obs.w.f), format_double(obs.w.m)});
      }
    }
    out.close();
  }

  static NameTable read_tsv(const std::string& path, DecadeRange decades = {}) {
    TsvReader reader(path);
    std::vector<std::string> fields;
    if (!reader.next(fields)) reader.fail("empty file");
    if (fields.size() != 6)
      reader.fail("header must have 6 columns (name source_id country decade wf wm)");

    NameTable table;
    std::set<std::string> sources;
    std::map<std::pair<NameKey, std::pair<std::string, ContextKey>>, Weights> rows;
    while (reader.next(fields)) {
      if (fields.size() == 1 && fields[0].empty()) continue;
      if (fields.size() != 6)
        reader.fail("expected 6 columns, got " + std::to_string(fields.size()));
      const std::string& name = fields[0];
      if (name.empty() ||
          !std::all_of(name.begin(), name.end(), [](char c) { return c >= 'a' && c <= 'z'; }))
        reader.fail("name '" + name + "' is not a normalized key");
      if (fields[1].empty()) reader.fail("empty source_id");
      ContextKey ctx;
      if (!detail::valid_country(fields[2]))
        reader.fail("country '" + fields[2] + "' is not an alpha-2 code or '--'");
      ctx.country = fields[2];
      if (fields[3] != "-") {
        long decade = 0;
        if (!parse_int(fields[3], decade) || decade % 10 != 0 || decade < decades.min ||
            decade > decades.max)
          reader.fail("unparsable decade '" + fields[3] + "'");
        ctx.decade = static_cast<int>(decade);
      }
      Weights w;
      if (!parse_double(fields[4], w.f) || !parse_double(fields[5], w.m))
        reader.fail("unparsable weight");
      if (w.f < 0 || w.m < 0) reader.fail("negative weight");
      if (w.total() <= 0) reader.fail("row has zero total weight");
      sources.insert(fields[1]);
      rows[{name, {fields[1], ctx}}] += w;
    }
    if (rows.empty()) reader.fail("no data rows");

    table.source_ids_.assign(sources.begin(), sources.end());
    for (const auto& [key, w] : rows)
      table.add_observation(key.first, key.second.first, key.second.second, w);
    return table;
  }

  friend NameTable build_name_table(std::span<const SourceTable> sources,
                                    bool allow_unstratified);

 private:
  // Insertion happens in canonical (name, source, context) order, so every
  // accumulated total is independent of the order sources were supplied in.
  void add_observation(const NameKey& name, const std::string& source, const ContextKey& ctx,
                       const Weights& w) {
    NameRecord& rec = names_[name];
    rec.observations.push_back({source, ctx, w});
    rec.total += w;
    rec.by_source[source] += w;
    if (ctx.has_country()) {
      rec.by_country[ctx.country] += w;
      country_mass_[ctx.country] += w.total();
    }
    if (ctx.has_decade()) {
      rec.by_decade[ctx.decade] += w;
      decade_mass_[ctx.decade] += w.total();
    }
    if (ctx.has_country() && ctx.has_decade()) {
      rec.by_joint[ctx] += w;
      joint_mass_[ctx] += w.total();
    }
  }

  std::map<NameKey, NameRecord> names_;
  std::vector<std::string> source_ids_;
  std::map<std::string, double> country_mass_;
  std::map<int, double> decade_mass_;
  std::map<ContextKey, double> joint_mass_;
};

// Folds the given sources into a NameTable. The fold visits entries in
// canonical key order, so the result is identical for every permutation of
// the input. Sources must be post-stratified unless the caller explicitly
// opts into pass-through.
inline NameTable build_name_table(std::span<const SourceTable> sources,
                                  bool allow_unstratified = false) {
  if (sources.empty()) throw std::invalid_argument("no sources");
  std::set<std::string> ids;
  for (const SourceTable& s : sources) {
    if (!ids.insert(s.source_id).second)
      throw std::invalid_argument("duplicate source_id '" + s.source_id + "'");
    if (!s.stratified && !allow_unstratified)
      throw std::invalid_argument("source '" + s.source_id + "' is not post-stratified");
  }

  NameTable table;
  table.source_ids_.assign(ids.begin(), ids.end());

  // Collect (name, source, ctx) rows into a sorted map, then fold in key
  // order; source ids are unique, so no row can collide.
  std::map<std::pair<NameKey, std::pair<std::string, ContextKey>>, Weights> rows;
  for (const SourceTable& s : sources)
    for (const auto& [key, w] : s.entries) rows[{key.first, {s.source_id, key.second}}] = w;
  for (const auto& [key, w] : rows)
    table.add_observation(key.first, key.second.first, key.second.second, w);
  return table;
}

}  // namespace nomen
