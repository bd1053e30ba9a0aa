#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "fuzz_corpus.hpp"
#include "nomen/corpus.hpp"
#include "nomen/taxonomy.hpp"

using namespace nomen;

namespace {

// Single-source table built straight from (name, ctx) -> (wf, wm).
NameTable table_from(const std::map<std::pair<NameKey, ContextKey>, Weights>& entries) {
  SourceTable s;
  s.source_id = "s";
  s.stratified = true;
  s.entries = entries;
  return build_name_table(std::vector<SourceTable>{s});
}

}  // namespace

// Expected values frozen from a 40-digit mpmath evaluation of
// -p log2 p - (1-p) log2(1-p).
TEST_CASE("entropy matches high-precision oracle") {
  CHECK(entropy_bits(0.5) == 1.0);
  CHECK(entropy_bits(1.0) == 0.0);
  CHECK(entropy_bits(0.0) == 0.0);
  CHECK(entropy_bits(0.9) == Catch::Approx(0.46899559358928122).margin(1e-15));
  CHECK(entropy_bits(0.89) == Catch::Approx(0.49991595816452800).margin(1e-15));
  CHECK(entropy_bits(0.95) == Catch::Approx(0.28639695711595613).margin(1e-15));
  CHECK(entropy_bits(1.0 / 3.0) == Catch::Approx(0.91829583405448951).margin(1e-15));
  CHECK(entropy_bits(0.25) == entropy_bits(0.75));
  CHECK_THROWS_AS(entropy_bits(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(entropy_bits(1.1), std::invalid_argument);
}

TEST_CASE("the informativeness boundary sits between 0.89 and 0.90") {
  CHECK(entropy_bits(0.9) <= 0.47);
  CHECK(entropy_bits(0.89) > 0.47);
  // true boundary: H(0.8996828910385736) == 0.47
  CHECK(entropy_bits(0.8997) < 0.47);
  CHECK(entropy_bits(0.8996) > 0.47);
}

TEST_CASE("conditional entropy on a split name") {
  // Equal-mass strata with opposite shares: conditioning reveals H(0.9)
  // while the pooled distribution is a coin flip.
  NameTable t = table_from({
      {{"jean", ContextKey{"FR", -1}}, {90.0, 10.0}},
      {{"jean", ContextKey{"US", -1}}, {10.0, 90.0}},
  });
  ConditionalEntropy ce = conditional_entropy("jean", ConditionOn::Country, t);
  CHECK_FALSE(ce.vacuous);
  CHECK(ce.bits == Catch::Approx(0.46899559358928122).margin(1e-12));
  CHECK(ce.marginal_bits == Catch::Approx(1.0).margin(1e-12));
  CHECK(entropy_bits(t.find("jean")->p_f_pooled()) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("single-context names condition to their stratum entropy") {
  NameTable t = table_from({
      {{"ana", ContextKey{"BR", 1990}}, {19.0, 1.0}},
  });
  ConditionalEntropy country = conditional_entropy("ana", ConditionOn::Country, t);
  CHECK(country.bits == Catch::Approx(entropy_bits(0.95)).margin(1e-15));
  ConditionalEntropy decade = conditional_entropy("ana", ConditionOn::Decade, t);
  CHECK(decade.bits == Catch::Approx(entropy_bits(0.95)).margin(1e-15));
  CHECK_THROWS_AS(conditional_entropy("missing", ConditionOn::Country, t),
                  std::invalid_argument);
}

TEST_CASE("posterior over contexts follows the Bayes ratio") {
  // P(name|A) = 1/1000, P(name|B) = 3/1000 -> posterior 0.25 / 0.75.
  // Stratum A is pure female (H=0), stratum B is 1/3 female.
  NameTable t = table_from({
      {{"x", ContextKey{"AA", -1}}, {1.0, 0.0}},
      {{"x", ContextKey{"BB", -1}}, {1.0, 2.0}},
      {{"fill", ContextKey{"AA", -1}}, {500.0, 499.0}},
      {{"fill", ContextKey{"BB", -1}}, {499.0, 498.0}},
  });
  REQUIRE(t.country_mass().at("AA") == 1000.0);
  REQUIRE(t.country_mass().at("BB") == 1000.0);
  ConditionalEntropy ce = conditional_entropy("x", ConditionOn::Country, t);
  const double expected = 0.25 * 0.0 + 0.75 * entropy_bits(1.0 / 3.0);
  CHECK(ce.bits == Catch::Approx(expected).margin(1e-12));
}

TEST_CASE("a supplied prior reweights the strata") {
  NameTable t = table_from({
      {{"x", ContextKey{"AA", -1}}, {10.0, 0.0}},
      {{"x", ContextKey{"BB", -1}}, {5.0, 5.0}},
  });
  TaxonomyParams params;
  params.prior[ContextKey{"AA", -1}] = 1.0;
  params.prior[ContextKey{"BB", -1}] = 0.0;
  ConditionalEntropy ce = conditional_entropy("x", ConditionOn::Country, t, params);
  CHECK(ce.bits == 0.0);  // all mass on the pure stratum

  TaxonomyParams bad;
  bad.prior[ContextKey{"AA", -1}] = 0.7;
  CHECK_THROWS_AS(conditional_entropy("x", ConditionOn::Country, t, bad),
                  std::invalid_argument);
}

TEST_CASE("sentinel contexts are excluded from conditioning") {
  // All the gendered signal sits in unknown contexts; conditioning on the
  // known coin-flip stratum is vacuous for decades and weak for countries.
  NameTable t = table_from({
      {{"x", ContextKey{"--", -1}}, {95.0, 5.0}},
      {{"x", ContextKey{"US", -1}}, {1.0, 1.0}},
  });
  ConditionalEntropy country = conditional_entropy("x", ConditionOn::Country, t);
  CHECK_FALSE(country.vacuous);
  CHECK(country.bits == Catch::Approx(1.0).margin(1e-12));  // only the US stratum

  ConditionalEntropy decade = conditional_entropy("x", ConditionOn::Decade, t);
  CHECK(decade.vacuous);  // no known decade anywhere for this name
  CHECK(decade.bits == Catch::Approx(entropy_bits(96.0 / 102.0)).margin(1e-12));
}

TEST_CASE("assign_taxon walks the decision tree") {
  std::map<std::pair<NameKey, ContextKey>, Weights> entries;
  // gendered, high coverage: H(0.95) = 0.286 <= 0.47, weight 1000
  entries[{"maria", ContextKey{"US", 1990}}] = {950.0, 50.0};
  // gendered, low coverage: weight 4 < 10
  entries[{"rare", ContextKey{"FR", 1990}}] = {0.2, 3.8};
  // conditionally gendered by country
  entries[{"jean", ContextKey{"FR", 1990}}] = {10.0, 90.0};
  entries[{"jean", ContextKey{"US", 1990}}] = {90.0, 10.0};
  // conditionally gendered by decade (same country both eras)
  entries[{"vivian", ContextKey{"US", 1950}}] = {5.0, 95.0};
  entries[{"vivian", ContextKey{"US", 2010}}] = {95.0, 5.0};
  // weakly gendered everywhere
  entries[{"kim", ContextKey{"US", 1990}}] = {30.0, 28.0};
  entries[{"kim", ContextKey{"FR", 2010}}] = {22.0, 24.0};
  // joint-only (XOR): weak under either single conditioning
  entries[{"xor", ContextKey{"US", 1950}}] = {25.0, 0.0};
  entries[{"xor", ContextKey{"US", 2010}}] = {0.0, 25.0};
  entries[{"xor", ContextKey{"FR", 1950}}] = {0.0, 25.0};
  entries[{"xor", ContextKey{"FR", 2010}}] = {25.0, 0.0};
  NameTable t = table_from(entries);

  CHECK(assign_taxon("unseen", t).label == TaxonLabel::NoData);
  CHECK(assign_taxon("maria", t).label == TaxonLabel::GenderedHighCoverage);
  CHECK(assign_taxon("rare", t).label == TaxonLabel::GenderedLowCoverage);
  CHECK(assign_taxon("jean", t).label == TaxonLabel::ConditionallyGenderedCountry);
  CHECK(assign_taxon("vivian", t).label == TaxonLabel::ConditionallyGenderedDecade);
  CHECK(assign_taxon("kim", t).label == TaxonLabel::WeaklyGendered);

  SECTION("joint-only names stay weakly gendered") {
    TaxonAssignment xor_taxon = assign_taxon("xor", t);
    CHECK(xor_taxon.label == TaxonLabel::WeaklyGendered);
    // the joint conditioning would have been informative
    ConditionalEntropy joint = conditional_entropy("xor", ConditionOn::CountryAndDecade, t);
    CHECK(joint.bits == 0.0);
  }

  SECTION("country wins when both conditionals are informative") {
    std::map<std::pair<NameKey, ContextKey>, Weights> both;
    both[{"dual", ContextKey{"US", 1950}}] = {50.0, 0.0};
    both[{"dual", ContextKey{"FR", 2010}}] = {0.0, 50.0};
    NameTable t2 = table_from(both);
    const TaxonAssignment a = assign_taxon("dual", t2);
    CHECK(a.label == TaxonLabel::ConditionallyGenderedCountry);
    CHECK(a.entropy_country.has_value());
    CHECK_FALSE(a.entropy_decade.has_value());  // short-circuited
  }

  SECTION("entropy fields mirror the path taken") {
    TaxonAssignment maria = assign_taxon("maria", t);
    CHECK(maria.entropy.has_value());
    CHECK_FALSE(maria.entropy_country.has_value());
    TaxonAssignment kim = assign_taxon("kim", t);
    CHECK(kim.entropy_country.has_value());
    CHECK(kim.entropy_decade.has_value());
  }

  SECTION("coverage threshold moves names only between High and Low") {
    TaxonomyParams params;
    params.coverage_threshold = 2000.0;
    CHECK(assign_taxon("maria", t, params).label == TaxonLabel::GenderedLowCoverage);
    params.coverage_threshold = 0.1;
    CHECK(assign_taxon("rare", t, params).label == TaxonLabel::GenderedHighCoverage);
  }
}

TEST_CASE("partition and Jensen hold on a fuzzed corpus") {
  NameTable t = nomen::testing::make_fuzz_corpus(2024, 1200);
  std::map<TaxonLabel, std::size_t> counts;
  std::size_t queried = 0;
  for (const auto& [name, rec] : t.names()) {
    ++queried;
    const TaxonAssignment a = assign_taxon(name, t);
    ++counts[a.label];
    for (ConditionOn by :
         {ConditionOn::Country, ConditionOn::Decade, ConditionOn::CountryAndDecade}) {
      const ConditionalEntropy ce = conditional_entropy(name, by, t);
      CHECK(ce.bits <= ce.marginal_bits + 1e-12);
      CHECK(ce.bits >= -1e-12);
      CHECK(ce.bits <= 1.0 + 1e-12);
    }
  }
  std::size_t total = 0;
  for (const auto& [label, n] : counts) total += n;
  CHECK(total == queried);
  // the generator plants every reachable leaf
  CHECK(counts[TaxonLabel::GenderedHighCoverage] > 0);
  CHECK(counts[TaxonLabel::GenderedLowCoverage] > 0);
  CHECK(counts[TaxonLabel::ConditionallyGenderedCountry] > 0);
  CHECK(counts[TaxonLabel::ConditionallyGenderedDecade] > 0);
  CHECK(counts[TaxonLabel::WeaklyGendered] > 0);
  CHECK(assign_taxon("neverseen", t).label == TaxonLabel::NoData);
}

TEST_CASE("doubling every weight changes nothing but coverage units") {
  NameTable t = nomen::testing::make_fuzz_corpus(7, 300);
  for (double k : {0.25, 2.0, 4096.0}) {
    // rebuild with all weights scaled by a power of two (exact in FP)
    SourceTable s;
    s.source_id = "scaled";
    s.stratified = true;
    for (const auto& [name, rec] : t.names())
      for (const auto& obs : rec.observations) {
        Weights& w = s.entries[{name, obs.ctx}];
        w.f += obs.w.f * k;
        w.m += obs.w.m * k;
      }
    NameTable scaled = build_name_table(std::vector<SourceTable>{s});

    // merge the original the same way so per-name pooling matches
    SourceTable merged;
    merged.source_id = "scaled";
    merged.stratified = true;
    for (const auto& [name, rec] : t.names())
      for (const auto& obs : rec.observations) {
        Weights& w = merged.entries[{name, obs.ctx}];
        w.f += obs.w.f;
        w.m += obs.w.m;
      }
    NameTable base = build_name_table(std::vector<SourceTable>{merged});

    TaxonomyParams scaled_params;
    scaled_params.coverage_threshold *= k;
    for (const auto& [name, rec] : base.names()) {
      const TaxonAssignment a = assign_taxon(name, base);
      const TaxonAssignment b = assign_taxon(name, scaled, scaled_params);
      REQUIRE(a.label == b.label);
      REQUIRE(*a.entropy == *b.entropy);  // bit-exact under power-of-two scaling
    }
  }
}

TEST_CASE("raising the coverage threshold never promotes a name") {
  NameTable t = nomen::testing::make_fuzz_corpus(99, 300);
  TaxonomyParams lo, hi;
  lo.coverage_threshold = 5.0;
  hi.coverage_threshold = 50.0;
  for (const auto& [name, rec] : t.names()) {
    const TaxonLabel a = assign_taxon(name, t, lo).label;
    const TaxonLabel b = assign_taxon(name, t, hi).label;
    if (a == TaxonLabel::GenderedLowCoverage)
      CHECK(b == TaxonLabel::GenderedLowCoverage);
    if (b == TaxonLabel::GenderedHighCoverage)
      CHECK(a == TaxonLabel::GenderedHighCoverage);
  }
}

TEST_CASE("taxonomy params validate") {
  TaxonomyParams params;
  params.entropy_threshold = 0.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.entropy_threshold = 0.47;
  params.coverage_threshold = 0.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
}
