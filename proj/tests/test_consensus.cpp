#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <random>
#include <vector>

#include "nomen/consensus.hpp"
#include "nomen/corpus.hpp"

using namespace nomen;

namespace {

ReportMatrix dense_matrix(std::size_t n_sources, std::size_t n_names,
                          const std::vector<std::uint8_t>& x_rowmajor) {
  ReportMatrix m;
  m.source_ids.resize(n_sources);
  m.names.resize(n_names);
  for (std::size_t n = 0; n < n_sources; ++n) m.source_ids[n] = "s" + std::to_string(n);
  for (std::size_t i = 0; i < n_names; ++i) m.names[i] = "n" + std::to_string(i);
  m.by_name.resize(n_names);
  m.by_source.resize(n_sources);
  for (std::size_t n = 0; n < n_sources; ++n)
    for (std::size_t i = 0; i < n_names; ++i) {
      const std::uint8_t x = x_rowmajor[n * n_names + i];
      m.by_name[i].push_back({static_cast<std::uint32_t>(n), x});
      m.by_source[n].push_back({static_cast<std::uint32_t>(i), x});
    }
  return m;
}

// Random sparse matrix with every row and column nonempty.
ReportMatrix fuzz_matrix(std::mt19937_64& rng, std::size_t n_sources, std::size_t n_names,
                         double density = 0.7) {
  ReportMatrix m;
  m.source_ids.resize(n_sources);
  m.names.resize(n_names);
  for (std::size_t n = 0; n < n_sources; ++n) m.source_ids[n] = "s" + std::to_string(n);
  for (std::size_t i = 0; i < n_names; ++i) m.names[i] = "n" + std::to_string(i);
  m.by_name.resize(n_names);
  m.by_source.resize(n_sources);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto add = [&](std::size_t n, std::size_t i, std::uint8_t x) {
    m.by_name[i].push_back({static_cast<std::uint32_t>(n), x});
    m.by_source[n].push_back({static_cast<std::uint32_t>(i), x});
  };
  for (std::size_t n = 0; n < n_sources; ++n)
    for (std::size_t i = 0; i < n_names; ++i)
      if (unif(rng) < density) add(n, i, unif(rng) < 0.5 ? 1 : 0);
  for (std::size_t i = 0; i < n_names; ++i)
    if (m.by_name[i].empty()) add(rng() % n_sources, i, 1);
  for (std::size_t n = 0; n < n_sources; ++n)
    if (m.by_source[n].empty()) add(n, rng() % n_names, 0);
  return m;
}

}  // namespace

TEST_CASE("expectation matches hand-evaluated posteriors") {
  SECTION("one source, c = 0.9, x = 1") {
    ReportMatrix m = dense_matrix(1, 1, {1});
    std::vector<double> c = {0.9};
    std::vector<double> z = cct_expectation(m, c);
    CHECK(z[0] == Catch::Approx(0.9).margin(1e-12));
  }
  SECTION("two agreeing sources: 0.81 / 0.82") {
    ReportMatrix m = dense_matrix(2, 1, {1, 1});
    std::vector<double> c = {0.9, 0.9};
    std::vector<double> z = cct_expectation(m, c);
    CHECK(z[0] == Catch::Approx(0.81 / 0.82).margin(1e-12));
  }
  SECTION("symmetric disagreement is an exact tie") {
    ReportMatrix m = dense_matrix(2, 1, {1, 0});
    std::vector<double> c = {0.9, 0.9};
    std::vector<double> z = cct_expectation(m, c);
    CHECK(z[0] == 0.5);
  }
}

TEST_CASE("maximization is mean agreement with the consensus") {
  SECTION("perfect agreement") {
    ReportMatrix m = dense_matrix(1, 2, {1, 0});
    std::vector<double> z = {1.0, 0.0};
    CHECK(cct_maximization(m, z)[0] == 1.0);
  }
  SECTION("half agreement") {
    ReportMatrix m = dense_matrix(1, 2, {1, 1});
    std::vector<double> z = {1.0, 0.0};
    CHECK(cct_maximization(m, z)[0] == 0.5);
  }
  SECTION("soft consensus") {
    ReportMatrix m = dense_matrix(1, 2, {1, 1});
    std::vector<double> z = {0.9, 0.9};
    CHECK(cct_maximization(m, z)[0] == Catch::Approx(0.9).margin(1e-15));
  }
}

TEST_CASE("unanimous panel converges to certainty") {
  ReportMatrix m = dense_matrix(3, 5, std::vector<std::uint8_t>(15, 1));

  // First E-step from the 0.9 initialization: 0.9^3 / (0.9^3 + 0.1^3).
  std::vector<double> c0(3, 0.9);
  std::vector<double> z0 = cct_expectation(m, c0);
  CHECK(z0[0] == Catch::Approx(0.729 / 0.730).margin(1e-12));

  ConsensusFit fit = cct_fit(m);
  REQUIRE(fit.converged);
  for (double z : fit.z) CHECK(z == Catch::Approx(1.0).margin(1e-8));
  for (double c : fit.c) CHECK(c == Catch::Approx(1.0).margin(1e-8));
}

TEST_CASE("label-flip symmetry is bit-exact") {
  std::mt19937_64 rng(991);
  for (int trial = 0; trial < 60; ++trial) {
    ReportMatrix m = fuzz_matrix(rng, 2 + rng() % 10, 3 + rng() % 30);
    ConsensusFit fit = cct_fit(m);
    ConsensusFit flipped = cct_fit(m.flipped());
    REQUIRE(flipped.iterations == fit.iterations);
    REQUIRE(flipped.converged == fit.converged);
    for (std::size_t i = 0; i < fit.z.size(); ++i) REQUIRE(flipped.z[i] == 1.0 - fit.z[i]);
    for (std::size_t n = 0; n < fit.c.size(); ++n) REQUIRE(flipped.c[n] == fit.c[n]);
  }
}

TEST_CASE("permutation equivariance is bit-exact") {
  std::mt19937_64 rng(992);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t N = 2 + rng() % 9, M = 3 + rng() % 25;
    ReportMatrix m = fuzz_matrix(rng, N, M);
    ConsensusFit fit = cct_fit(m);

    std::vector<std::uint32_t> sperm(N), nperm(M);
    std::iota(sperm.begin(), sperm.end(), 0);
    std::iota(nperm.begin(), nperm.end(), 0);
    std::shuffle(sperm.begin(), sperm.end(), rng);
    std::shuffle(nperm.begin(), nperm.end(), rng);

    // sperm[n] = new index of old source n; likewise for names.
    ReportMatrix p;
    p.source_ids.resize(N);
    p.names.resize(M);
    p.by_source.resize(N);
    p.by_name.resize(M);
    for (std::size_t n = 0; n < N; ++n) p.source_ids[sperm[n]] = m.source_ids[n];
    for (std::size_t i = 0; i < M; ++i) p.names[nperm[i]] = m.names[i];
    for (std::size_t n = 0; n < N; ++n)
      for (const auto& r : m.by_source[n]) {
        p.by_source[sperm[n]].push_back({nperm[r.index], r.x});
        p.by_name[nperm[r.index]].push_back({sperm[n], r.x});
      }

    ConsensusFit pfit = cct_fit(p);
    REQUIRE(pfit.iterations == fit.iterations);
    for (std::size_t n = 0; n < N; ++n) REQUIRE(pfit.c[sperm[n]] == fit.c[n]);
    for (std::size_t i = 0; i < M; ++i) REQUIRE(pfit.z[nperm[i]] == fit.z[i]);
  }
}

TEST_CASE("initialization does not matter above one half") {
  std::mt19937_64 rng(993);
  std::vector<double> c_true;
  std::vector<std::uint8_t> z_true;
  for (int n = 0; n < 8; ++n) c_true.push_back(0.62 + 0.04 * n);
  for (int i = 0; i < 400; ++i) z_true.push_back(rng() % 2);
  ReportMatrix m = synth_generate(8, 400, c_true, z_true, 5);

  ConsensusFit reference = cct_fit(m, {.c0 = 0.9});
  for (double c0 : {0.55, 0.7, 0.99}) {
    ConsensusFit fit = cct_fit(m, {.c0 = c0});
    REQUIRE(fit.converged);
    for (std::size_t i = 0; i < fit.z.size(); ++i)
      CHECK(std::abs(fit.z[i] - reference.z[i]) < 1e-6);
  }
  CHECK_THROWS_AS(cct_fit(m, {.c0 = 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(cct_fit(m, {.c0 = 1.0}), std::invalid_argument);
}

TEST_CASE("converged fits are fixed points") {
  std::mt19937_64 rng(994);
  for (int trial = 0; trial < 20; ++trial) {
    ReportMatrix m = fuzz_matrix(rng, 3 + rng() % 8, 5 + rng() % 30);
    // noise-only matrices can take >500 iterations; the property under test
    // is conditional on convergence
    ConsensusFit fit = cct_fit(m, {.max_iter = 20000});
    REQUIRE(fit.converged);
    std::vector<double> z2 = cct_expectation(m, fit.c);
    std::vector<double> c2 = cct_maximization(m, z2);
    for (std::size_t i = 0; i < z2.size(); ++i) CHECK(std::abs(z2[i] - fit.z[i]) <= 1e-8);
    for (std::size_t n = 0; n < c2.size(); ++n) CHECK(std::abs(c2[n] - fit.c[n]) <= 1e-8);
    for (double z : fit.z) CHECK((z >= 0.0 && z <= 1.0));
    for (double c : fit.c) CHECK((c >= 0.0 && c <= 1.0));
  }
}

TEST_CASE("synthetic panels recover planted parameters") {
  std::vector<double> c_true;
  for (int n = 0; n < 8; ++n) c_true.push_back(0.6 + 0.045 * n);
  std::mt19937_64 rng(42);
  std::vector<std::uint8_t> z_true;
  for (int i = 0; i < 1500; ++i) z_true.push_back(rng() % 2);

  ReportMatrix m = synth_generate(8, 1500, c_true, z_true, 1234);
  ConsensusFit fit = cct_fit(m);
  REQUIRE(fit.converged);
  for (std::size_t n = 0; n < c_true.size(); ++n)
    CHECK(std::abs(fit.c[n] - c_true[n]) < 0.04);
  // 8 sources at these competences put the optimal rule itself near 96-97%
  std::size_t correct = 0;
  for (std::size_t i = 0; i < z_true.size(); ++i)
    if ((fit.z[i] > 0.5) == (z_true[i] == 1)) ++correct;
  CHECK(static_cast<double>(correct) / static_cast<double>(z_true.size()) > 0.95);
}

TEST_CASE("synth_generate is reproducible and honors planted parameters") {
  std::vector<double> ones(4, 1.0);
  std::vector<std::uint8_t> z_true = {1, 0, 1, 1, 0};
  ReportMatrix exact = synth_generate(4, 5, ones, z_true, 7);
  for (std::size_t n = 0; n < 4; ++n)
    for (const auto& r : exact.by_source[n]) REQUIRE(r.x == z_true[r.index]);

  std::vector<double> c_true(6, 0.8);
  std::vector<std::uint8_t> z_big(3000, 1);
  ReportMatrix a = synth_generate(6, 3000, c_true, z_big, 99);
  ReportMatrix b = synth_generate(6, 3000, c_true, z_big, 99);
  for (std::size_t n = 0; n < 6; ++n)
    for (std::size_t i = 0; i < 3000; ++i) REQUIRE(a.by_source[n][i].x == b.by_source[n][i].x);

  // Law of large numbers: agreement rate near the planted competence.
  std::vector<double> eps(6, 0.55);
  ReportMatrix lln = synth_generate(6, 3000, eps, z_big, 5150);
  for (std::size_t n = 0; n < 6; ++n) {
    double agree = 0;
    for (const auto& r : lln.by_source[n]) agree += (r.x == 1);
    const double rate = agree / 3000.0;
    const double sigma = std::sqrt(0.55 * 0.45 / 3000.0);
    CHECK(std::abs(rate - 0.55) < 3.0 * sigma);
  }
}

TEST_CASE("binarize thresholds per-source shares and reports drops") {
  SourceTable a;
  a.source_id = "a";
  a.stratified = true;
  a.entries[{"anna", ContextKey{}}] = {99.0, 1.0};
  a.entries[{"kim", ContextKey{}}] = {4.0, 6.0};
  a.entries[{"pat", ContextKey{}}] = {5.0, 5.0};  // exact tie -> missing
  SourceTable b;
  b.source_id = "b";
  b.stratified = true;
  b.entries[{"anna", ContextKey{}}] = {1.0, 3.0};
  NameTable table = build_name_table(std::vector<SourceTable>{a, b});

  BinarizeResult bin = binarize_reports(table);
  REQUIRE(bin.skipped_names == std::vector<NameKey>{"pat"});
  CHECK(bin.skipped_sources.empty());
  REQUIRE(bin.matrix.n_names() == 2);
  REQUIRE(bin.matrix.n_sources() == 2);

  auto report = [&](const std::string& source, const std::string& name) -> int {
    const std::size_t n = static_cast<std::size_t>(
        std::find(bin.matrix.source_ids.begin(), bin.matrix.source_ids.end(), source) -
        bin.matrix.source_ids.begin());
    const std::size_t i = static_cast<std::size_t>(
        std::find(bin.matrix.names.begin(), bin.matrix.names.end(), name) -
        bin.matrix.names.begin());
    for (const auto& r : bin.matrix.by_source[n])
      if (r.index == i) return r.x;
    return -1;
  };
  CHECK(report("a", "anna") == 1);
  CHECK(report("a", "kim") == 0);
  CHECK(report("b", "anna") == 0);
  CHECK(report("b", "kim") == -1);  // missing, not reported
}

TEST_CASE("near-ties inside the tolerance are missing, outside are reports") {
  SourceTable a;
  a.source_id = "a";
  a.stratified = true;
  // p_f = 0.5 - 5e-14: inside the 1e-12 tie tolerance
  a.entries[{"knife", ContextKey{}}] = {1.0, 1.0 + 2e-13};
  // p_f just below 0.5 - 1e-12: a male report
  a.entries[{"edge", ContextKey{}}] = {1.0, 1.0 + 1e-8};
  a.entries[{"anna", ContextKey{}}] = {9.0, 1.0};
  NameTable table = build_name_table(std::vector<SourceTable>{a});
  BinarizeResult bin = binarize_reports(table);
  CHECK(bin.skipped_names == std::vector<NameKey>{"knife"});
  REQUIRE(bin.matrix.n_names() == 2);
}

TEST_CASE("a source losing every report is dropped") {
  SourceTable a;
  a.source_id = "a";
  a.stratified = true;
  a.entries[{"anna", ContextKey{}}] = {9.0, 1.0};
  SourceTable ties;
  ties.source_id = "ties";
  ties.stratified = true;
  ties.entries[{"anna", ContextKey{}}] = {2.0, 2.0};
  NameTable table = build_name_table(std::vector<SourceTable>{a, ties});
  BinarizeResult bin = binarize_reports(table);
  CHECK(bin.skipped_sources == std::vector<std::string>{"ties"});
  CHECK(bin.matrix.n_sources() == 1);
}

TEST_CASE("average consensus lies between the sources") {
  SourceTable a, b;
  a.source_id = "a";
  a.stratified = true;
  b.source_id = "b";
  b.stratified = true;
  a.entries[{"lena", ContextKey{}}] = {9.0, 1.0};
  b.entries[{"lena", ContextKey{}}] = {10.0, 0.0};
  a.entries[{"kim", ContextKey{}}] = {1.0, 9.0};
  b.entries[{"kim", ContextKey{}}] = {9.0, 1.0};
  a.entries[{"solo", ContextKey{}}] = {3.0, 1.0};
  NameTable table = build_name_table(std::vector<SourceTable>{a, b});

  std::map<NameKey, double> avg = average_consensus(table);
  CHECK(avg.at("lena") == Catch::Approx(0.95));
  CHECK(avg.at("kim") == Catch::Approx(0.5));
  CHECK(avg.at("solo") == 0.75);  // single source: identity
  CHECK(avg.find("absent") == avg.end());

  std::mt19937_64 rng(995);
  for (int trial = 0; trial < 50; ++trial) {
    SourceTable s1, s2, s3;
    s1.source_id = "x";
    s2.source_id = "y";
    s3.source_id = "z";
    s1.stratified = s2.stratified = s3.stratified = true;
    std::uniform_real_distribution<double> w(0.1, 20.0);
    for (int i = 0; i < 10; ++i) {
      NameKey name = "n" + std::to_string(i);
      s1.entries[{name, ContextKey{}}] = {w(rng), w(rng)};
      if (rng() % 2) s2.entries[{name, ContextKey{}}] = {w(rng), w(rng)};
      if (rng() % 2) s3.entries[{name, ContextKey{}}] = {w(rng), w(rng)};
    }
    NameTable t = build_name_table(std::vector<SourceTable>{s1, s2, s3});
    std::map<NameKey, double> means = average_consensus(t);
    for (const auto& [name, rec] : t.names()) {
      double lo = 1.0, hi = 0.0;
      for (const auto& [src, wts] : rec.by_source) {
        lo = std::min(lo, wts.p_f());
        hi = std::max(hi, wts.p_f());
      }
      CHECK(means.at(name) >= lo - 1e-12);
      CHECK(means.at(name) <= hi + 1e-12);
    }
  }
}

TEST_CASE("fit serialization round-trips at 12 digits") {
  std::mt19937_64 rng(996);
  ReportMatrix m = fuzz_matrix(rng, 5, 20);
  ConsensusFit fit = cct_fit(m);
  const std::string prefix = (std::filesystem::temp_directory_path() / "nomen_fit_").string();
  write_fit(fit, m, prefix);
  FitTables tables = read_fit(prefix);
  REQUIRE(tables.competences.size() == m.n_sources());
  REQUIRE(tables.consensus.size() == m.n_names());
  for (std::size_t n = 0; n < m.n_sources(); ++n) {
    const double c = tables.competences.at(m.source_ids[n]);
    CHECK(std::abs(c - fit.c[n]) <= 1e-11 * std::max(1.0, std::abs(fit.c[n])));
  }
  for (std::size_t i = 0; i < m.n_names(); ++i) {
    const double z = tables.consensus.at(m.names[i]);
    CHECK(std::abs(z - fit.z[i]) <= 1e-11 * std::max(1.0, std::abs(fit.z[i])));
  }
}
