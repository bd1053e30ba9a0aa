// Command-line front end: builds corpora from standardized reference files,
// fits the consensus model, classifies name lists, assigns taxonomy leaves,
// and compares classifiers. Every subcommand is deterministic for fixed
// inputs, flags, and seeds.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nomen/classify.hpp"
#include "nomen/consensus.hpp"
#include "nomen/corpus.hpp"
#include "nomen/eval.hpp"
#include "nomen/normalize.hpp"
#include "nomen/taxonomy.hpp"
#include "nomen/tsv.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (!path.empty() && path != "-") {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open " + path + " for writing");
      stream = &file;
    }
  }
  std::ostream& out() { return *stream; }
};

// Analysis values (probabilities, entropies) print at 12 significant digits:
// they pass through libm, and pinning the precision keeps outputs stable
// across platforms. Raw weights print shortest-round-trip instead.
std::string opt_str(const std::optional<double>& v) {
  return v ? nomen::format_double(*v, 12) : std::string();
}

// --- ingest ---------------------------------------------------------------

int run_ingest(const std::string& dir, const std::string& out_path,
               const std::vector<std::string>& stratify) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".tsv")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no .tsv files in " << dir << "\n";
    return 1;
  }

  const bool stratify_all =
      std::find(stratify.begin(), stratify.end(), "all") != stratify.end();
  std::set<std::string> stratify_ids(stratify.begin(), stratify.end());
  stratify_ids.erase("all");

  std::vector<nomen::SourceTable> sources;
  for (const fs::path& path : files) {
    const std::string source_id = path.stem().string();
    nomen::SourceTable table = nomen::ingest_source(path.string(), source_id);
    if (table.rows_skipped > 0)
      std::cerr << source_id << ": skipped " << table.rows_skipped
                << " rows with unusable names\n";
    if (stratify_all || stratify_ids.count(source_id)) {
      table = nomen::poststratify(std::move(table));
      if (table.stratify_skipped)
        std::cerr << source_id << ": one group absent, post-stratification skipped\n";
      stratify_ids.erase(source_id);
    }
    sources.push_back(std::move(table));
  }
  for (const std::string& id : stratify_ids) {
    std::cerr << "--stratify " << id << " matches no ingested source\n";
    return 1;
  }

  nomen::NameTable table = nomen::build_name_table(sources, /*allow_unstratified=*/true);
  table.write_tsv(out_path);
  std::cerr << "wrote " << table.size() << " names from " << sources.size() << " sources to "
            << out_path << "\n";
  return 0;
}

// --- fit-cct ----------------------------------------------------------------

int run_fit(const std::string& corpus_path, const std::string& out_prefix,
            nomen::CctOptions opts) {
  nomen::NameTable table = nomen::NameTable::read_tsv(corpus_path);
  nomen::BinarizeResult bin = nomen::binarize_reports(table);
  nomen::ConsensusFit fit = nomen::cct_fit(bin.matrix, opts);
  nomen::write_fit(fit, bin.matrix, out_prefix);
  std::cout << "sources\t" << bin.matrix.n_sources() << "\n"
            << "names\t" << bin.matrix.n_names() << "\n"
            << "skipped_names\t" << bin.skipped_names.size() << "\n"
            << "skipped_sources\t" << bin.skipped_sources.size() << "\n"
            << "iterations\t" << fit.iterations << "\n"
            << "converged\t" << (fit.converged ? "true" : "false") << "\n";
  return 0;
}

// --- classify ---------------------------------------------------------------

struct InputRow {
  std::string raw_name;
  std::vector<std::string> countries;
};

std::vector<InputRow> read_input_rows(const std::string& path, int name_col, int countries_col) {
  std::vector<InputRow> rows;
  if (name_col < 0 && countries_col < 0) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      rows.push_back({line, {}});
    }
    return rows;
  }
  // TSV mode with a header row and 0-based column indices.
  nomen::TsvReader reader(path);
  std::vector<std::string> fields;
  if (!reader.next(fields)) reader.fail("empty file");
  const int ncol = name_col < 0 ? 0 : name_col;
  while (reader.next(fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (static_cast<std::size_t>(ncol) >= fields.size()) reader.fail("missing name column");
    InputRow row;
    row.raw_name = fields[static_cast<std::size_t>(ncol)];
    if (countries_col >= 0 && static_cast<std::size_t>(countries_col) < fields.size()) {
      std::stringstream cell(fields[static_cast<std::size_t>(countries_col)]);
      std::string code;
      while (std::getline(cell, code, ','))
        if (!code.empty()) row.countries.push_back(code);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_classification_row(std::ostream& out, const std::string& raw,
                              const nomen::Classification& c) {
  out << raw << '\t' << (c.normalized ? *c.normalized : std::string()) << '\t'
      << nomen::to_string(c.label) << '\t' << opt_str(c.p_f) << '\t' << c.basis.str() << '\t'
      << nomen::to_string(c.taxon.label) << '\n';
}

int run_classify(const std::string& corpus_path, const std::string& input_path,
                 const std::string& out_path, const std::string& estimator_name, double band,
                 int name_col, int countries_col) {
  nomen::NameTable table = nomen::NameTable::read_tsv(corpus_path);
  nomen::Estimator estimator = [&] {
    if (estimator_name == "avg") return nomen::Estimator::average(table);
    nomen::BinarizeResult bin = nomen::binarize_reports(table);
    return nomen::Estimator::cct(bin.matrix, nomen::cct_fit(bin.matrix));
  }();

  std::vector<InputRow> rows = read_input_rows(input_path, name_col, countries_col);
  OutputTarget target(out_path);
  std::ostream& out = target.out();
  out << "name\tnormalized\tlabel\tp_f\tbasis\ttaxon\n";
  for (const InputRow& row : rows) {
    const nomen::Classification c =
        row.countries.empty()
            ? nomen::classify(row.raw_name, table, estimator, band)
            : nomen::classify_conditioned(row.raw_name, row.countries, table, band);
    write_classification_row(out, row.raw_name, c);
  }
  return 0;
}

// --- taxonomy ---------------------------------------------------------------

int run_taxonomy(const std::string& corpus_path, const std::string& input_path,
                 const std::string& out_path, const nomen::TaxonomyParams& params, int name_col) {
  nomen::NameTable table = nomen::NameTable::read_tsv(corpus_path);
  std::vector<InputRow> rows = read_input_rows(input_path, name_col, -1);
  OutputTarget target(out_path);
  std::ostream& out = target.out();
  out << "name\tlabel\tH\tH_country\tH_decade\ttotal_weight\n";
  for (const InputRow& row : rows) {
    std::optional<nomen::NameKey> key = nomen::normalize_name(row.raw_name);
    nomen::TaxonAssignment t;
    if (key) t = nomen::assign_taxon(*key, table, params);
    out << row.raw_name << '\t' << nomen::to_string(t.label) << '\t' << opt_str(t.entropy)
        << '\t' << opt_str(t.entropy_country) << '\t' << opt_str(t.entropy_decade) << '\t'
        << (t.label == nomen::TaxonLabel::NoData ? std::string()
                                                 : nomen::format_double(t.total_weight))
        << '\n';
  }
  return 0;
}

// --- evaluate ---------------------------------------------------------------

struct Predictions {
  std::vector<std::string> raw_names;
  std::vector<nomen::Classification> rows;
};

Predictions read_predictions(const std::string& path) {
  nomen::TsvReader reader(path);
  std::vector<std::string> fields;
  if (!reader.next(fields)) reader.fail("empty file");
  if (fields.size() < 6) reader.fail("expected classify output (6 columns)");
  Predictions preds;
  while (reader.next(fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 6) reader.fail("expected 6 columns");
    nomen::Classification c;
    if (!fields[1].empty()) c.normalized = fields[1];
    std::optional<nomen::GenderLabel> label = nomen::parse_gender_label(fields[2]);
    if (!label) reader.fail("bad label '" + fields[2] + "'");
    c.label = *label;
    if (!fields[3].empty()) {
      double p = 0.0;
      if (!nomen::parse_double(fields[3], p)) reader.fail("bad p_f '" + fields[3] + "'");
      c.p_f = p;
    }
    bool found = false;
    for (nomen::TaxonLabel t :
         {nomen::TaxonLabel::NoData, nomen::TaxonLabel::GenderedHighCoverage,
          nomen::TaxonLabel::GenderedLowCoverage, nomen::TaxonLabel::ConditionallyGenderedCountry,
          nomen::TaxonLabel::ConditionallyGenderedDecade, nomen::TaxonLabel::WeaklyGendered}) {
      if (fields[5] == nomen::to_string(t)) {
        c.taxon.label = t;
        found = true;
        break;
      }
    }
    if (!found) reader.fail("bad taxon '" + fields[5] + "'");
    preds.raw_names.push_back(fields[0]);
    preds.rows.push_back(std::move(c));
  }
  if (preds.rows.empty()) reader.fail("no data rows");
  return preds;
}

// Predictions pair with labels by row order; mismatched names mean the files
// were not produced from the same list.
bool rows_align(const Predictions& preds, const nomen::LabeledSample& sample) {
  if (preds.rows.size() != sample.size()) {
    std::cerr << "predictions (" << preds.rows.size() << " rows) do not cover labels ("
              << sample.size() << " rows)\n";
    return false;
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (preds.raw_names[i] != sample[i].raw_name) {
      std::cerr << "row " << i + 2 << ": prediction for '" << preds.raw_names[i]
                << "' does not match label row '" << sample[i].raw_name << "'\n";
      return false;
    }
  }
  return true;
}

json report_to_json(const nomen::EvalReport& r) {
  json per_taxon = json::object();
  for (const auto& [label, stats] : r.per_taxon) {
    json t;
    t["count"] = stats.count;
    t["classified"] = stats.classified;
    t["matches"] = stats.matches;
    t["coverage"] = stats.coverage();
    if (auto c = stats.correspondence()) t["correspondence"] = *c;
    per_taxon[std::string(nomen::to_string(label))] = t;
  }
  json out;
  out["n"] = r.n;
  out["n_classified"] = r.n_classified;
  out["coverage"] = r.coverage;
  if (r.correspondence) out["correspondence"] = *r.correspondence;
  out["per_taxon"] = per_taxon;
  out["classified_female"] = r.classified_female;
  out["misclassified_female"] = r.misclassified_female;
  out["classified_male"] = r.classified_male;
  out["misclassified_male"] = r.misclassified_male;
  if (auto rate = r.misrate_female()) out["misrate_female"] = *rate;
  if (auto rate = r.misrate_male()) out["misrate_male"] = *rate;
  out["bias_error"] = r.bias_error;
  if (r.composition_estimate) out["composition_estimate"] = *r.composition_estimate;
  out["composition_target"] = r.composition_target;
  return out;
}

void print_report_text(std::ostream& out, const nomen::EvalReport& r) {
  auto pct = [](double v) { return nomen::format_double(v * 100.0, 4) + "%"; };
  out << "n              " << r.n << "\n";
  out << "classified     " << r.n_classified << "\n";
  out << "coverage       " << pct(r.coverage) << "\n";
  out << "correspondence " << (r.correspondence ? pct(*r.correspondence) : "n/a") << "\n";
  out << "\nper taxon:\n";
  for (const auto& [label, stats] : r.per_taxon) {
    out << "  " << nomen::to_string(label) << ": n=" << stats.count
        << " coverage=" << pct(stats.coverage());
    if (auto c = stats.correspondence()) out << " correspondence=" << pct(*c);
    out << "\n";
  }
  auto rate_str = [&](std::optional<double> rate) {
    return rate ? pct(*rate) : std::string("n/a");
  };
  out << "\nmisclassified  female " << r.misclassified_female << "/" << r.classified_female
      << " (" << rate_str(r.misrate_female()) << "), male " << r.misclassified_male << "/"
      << r.classified_male << " (" << rate_str(r.misrate_male()) << ")\n";
  out << "bias_error     " << r.bias_error << "\n";
  out << "composition    "
      << (r.composition_estimate ? nomen::format_double(*r.composition_estimate, 6) : "n/a")
      << " male (target " << nomen::format_double(r.composition_target, 6) << ")\n";
}

int run_evaluate(const std::string& preds_path, const std::string& labels_path,
                 const std::string& out_path, const std::string& format) {
  Predictions preds = read_predictions(preds_path);
  nomen::LabeledSample sample = nomen::read_labeled_sample(labels_path);
  if (!rows_align(preds, sample)) return 1;
  nomen::EvalReport report = nomen::evaluate(preds.rows, sample);
  OutputTarget target(out_path);
  if (format == "json")
    target.out() << report_to_json(report).dump(2) << "\n";
  else
    print_report_text(target.out(), report);
  return 0;
}

// --- compare ----------------------------------------------------------------

int run_compare(const std::string& a_path, const std::string& b_path,
                const std::string& labels_path, const std::string& out_path,
                std::size_t resamples, std::uint64_t seed) {
  Predictions preds_a = read_predictions(a_path);
  Predictions preds_b = read_predictions(b_path);
  nomen::LabeledSample sample = nomen::read_labeled_sample(labels_path);
  if (!rows_align(preds_a, sample) || !rows_align(preds_b, sample)) return 1;
  nomen::PairedDiff diff =
      nomen::bootstrap_paired_diff(preds_a.rows, preds_b.rows, sample, resamples, seed);
  OutputTarget target(out_path);
  std::ostream& out = target.out();
  // The seed goes into the header so published intervals are reproducible.
  out << "# paired bootstrap, R=" << resamples << ", seed=" << seed << "\n";
  out << "diff\tci_low\tci_high\n";
  out << nomen::format_double(diff.diff) << '\t' << nomen::format_double(diff.ci_low) << '\t'
      << nomen::format_double(diff.ci_high) << '\n';
  return 0;
}

// --- sources ----------------------------------------------------------------

int run_sources(const std::string& corpus_path, const std::string& out_path) {
  nomen::NameTable table = nomen::NameTable::read_tsv(corpus_path);
  nomen::BinarizeResult bin = nomen::binarize_reports(table);
  nomen::ConsensusFit fit = nomen::cct_fit(bin.matrix);

  struct Stats {
    std::size_t names = 0;
    std::size_t entries = 0;
    nomen::Weights weight;
  };
  std::map<std::string, Stats> stats;
  for (const auto& [name, rec] : table.names()) {
    for (const auto& [source, w] : rec.by_source) {
      Stats& s = stats[source];
      ++s.names;
      s.weight += w;
    }
    for (const nomen::NameTable::Observation& obs : rec.observations) ++stats[obs.source].entries;
  }
  std::map<std::string, double> competence;
  for (std::size_t n = 0; n < bin.matrix.n_sources(); ++n)
    competence[bin.matrix.source_ids[n]] = fit.c[n];

  OutputTarget target(out_path);
  std::ostream& out = target.out();
  out << "source_id\tnames\tentries\twf\twm\tcompetence\n";
  for (const auto& [source, s] : stats) {
    auto c = competence.find(source);
    out << source << '\t' << s.names << '\t' << s.entries << '\t'
        << nomen::format_double(s.weight.f) << '\t' << nomen::format_double(s.weight.m) << '\t'
        << (c == competence.end() ? std::string() : nomen::format_double(c->second, 12)) << '\n';
  }
  return 0;
}

}  // namespace

namespace {

int run_main(int argc, char** argv) {
  CLI::App app{"consensus name-gender estimation toolkit"};
  app.require_subcommand(1);
  app.set_config("--config");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "build a corpus from standardized reference files");
  std::string ingest_dir;
  std::string ingest_out = "corpus.tsv";
  std::vector<std::string> stratify;
  ingest->add_option("dir", ingest_dir, "directory of .tsv reference files")->required();
  ingest->add_option("--out", ingest_out, "output corpus path");
  ingest->add_option("--stratify", stratify,
                     "source id to post-stratify, or 'all'; repeatable");

  // fit-cct
  auto* fit = app.add_subcommand("fit-cct", "fit the consensus model");
  std::string fit_corpus, fit_prefix;
  nomen::CctOptions cct_opts;
  fit->add_option("--corpus", fit_corpus)->required();
  fit->add_option("--out-prefix", fit_prefix)->required();
  fit->add_option("--c0", cct_opts.c0, "initial competence");
  fit->add_option("--tol", cct_opts.tol, "convergence tolerance");
  fit->add_option("--max-iter", cct_opts.max_iter, "iteration cap");

  // classify
  auto* classify = app.add_subcommand("classify", "classify a list of names");
  std::string cls_corpus, cls_input, cls_out;
  std::string cls_estimator = "avg";
  double cls_band = 0.0;
  int cls_name_col = -1, cls_countries_col = -1;
  classify->add_option("--corpus", cls_corpus)->required();
  classify->add_option("--input", cls_input)->required();
  classify->add_option("--out", cls_out, "output path (default stdout)");
  classify->add_option("--estimator", cls_estimator, "avg or cct")
      ->check(CLI::IsMember({"avg", "cct"}));
  classify->add_option("--band", cls_band, "abstention half-width around 0.5");
  classify->add_option("--name-col", cls_name_col, "0-based name column (TSV input)");
  classify->add_option("--countries-col", cls_countries_col,
                       "0-based column of comma-separated country hints");

  // taxonomy
  auto* taxonomy = app.add_subcommand("taxonomy", "assign taxonomy leaves");
  std::string tax_corpus, tax_input, tax_out;
  nomen::TaxonomyParams tax_params;
  int tax_name_col = -1;
  taxonomy->add_option("--corpus", tax_corpus)->required();
  taxonomy->add_option("--input", tax_input)->required();
  taxonomy->add_option("--out", tax_out, "output path (default stdout)");
  taxonomy->add_option("--entropy-threshold", tax_params.entropy_threshold);
  taxonomy->add_option("--coverage-threshold", tax_params.coverage_threshold);
  taxonomy->add_option("--name-col", tax_name_col, "0-based name column (TSV input)");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "score predictions against labels");
  std::string eval_preds, eval_labels, eval_out;
  std::string eval_format = "text";
  evaluate->add_option("--preds", eval_preds)->required();
  evaluate->add_option("--labels", eval_labels)->required();
  evaluate->add_option("--out", eval_out, "output path (default stdout)");
  evaluate->add_option("--format", eval_format)->check(CLI::IsMember({"text", "json"}));

  // compare
  auto* compare = app.add_subcommand("compare", "bootstrap paired difference of two classifiers");
  std::string cmp_a, cmp_b, cmp_labels, cmp_out;
  std::size_t cmp_resamples = 10000;
  std::uint64_t cmp_seed = 0;
  compare->add_option("--a", cmp_a)->required();
  compare->add_option("--b", cmp_b)->required();
  compare->add_option("--labels", cmp_labels)->required();
  compare->add_option("--out", cmp_out, "output path (default stdout)");
  compare->add_option("--bootstrap", cmp_resamples, "number of resamples");
  compare->add_option("--seed", cmp_seed)->required();

  // sources
  auto* sources = app.add_subcommand("sources", "per-source coverage and competence audit");
  std::string src_corpus, src_out;
  sources->add_option("--corpus", src_corpus)->required();
  sources->add_option("--out", src_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (ingest->parsed()) return run_ingest(ingest_dir, ingest_out, stratify);
  if (fit->parsed()) return run_fit(fit_corpus, fit_prefix, cct_opts);
  if (classify->parsed())
    return run_classify(cls_corpus, cls_input, cls_out, cls_estimator, cls_band, cls_name_col,
                        cls_countries_col);
  if (taxonomy->parsed())
    return run_taxonomy(tax_corpus, tax_input, tax_out, tax_params, tax_name_col);
  if (evaluate->parsed()) return run_evaluate(eval_preds, eval_labels, eval_out, eval_format);
  if (compare->parsed())
    return run_compare(cmp_a, cmp_b, cmp_labels, cmp_out, cmp_resamples, cmp_seed);
  if (sources->parsed()) return run_sources(src_corpus, src_out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
