// Test-only corpus generator: synthesizes reference tables whose names span
// all six taxonomy leaves, with context structure planted per archetype.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nomen/corpus.hpp"

namespace nomen::testing {

enum class Archetype {
  StrongFemaleHigh,
  StrongMaleLow,
  CountryConditional,
  DecadeConditional,
  Weak,
  JointOnly,  // informative under (country, decade) jointly, weak otherwise
};

inline Archetype archetype_of(std::size_t i) {
  switch (i % 6) {
    case 0: return Archetype::StrongFemaleHigh;
    case 1: return Archetype::StrongMaleLow;
    case 2: return Archetype::CountryConditional;
    case 3: return Archetype::DecadeConditional;
    case 4: return Archetype::Weak;
    default: return Archetype::JointOnly;
  }
}

// Pure-letter key so the name survives normalize_name unchanged.
inline NameKey fuzz_name(std::size_t i) {
  NameKey out = "fz";
  do {
    out.push_back(static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i > 0);
  return out;
}

inline NameTable make_fuzz_corpus(std::uint64_t seed, std::size_t n_names,
                                  std::size_t n_sources = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::vector<std::string> countries = {"US", "FR", "JP", "DE", "BR"};
  const std::vector<int> decades = {1950, 1970, 1990, 2010};

  std::vector<SourceTable> sources(n_sources);
  for (std::size_t s = 0; s < n_sources; ++s) {
    sources[s].source_id = "src" + std::to_string(s);
    sources[s].stratified = true;
  }
  auto deposit = [&](const NameKey& name, const ContextKey& ctx, double wf, double wm) {
    if (wf <= 0.0 && wm <= 0.0) return;
    SourceTable& s = sources[rng() % n_sources];
    Weights& w = s.entries[{name, ctx}];
    w.f += wf;
    w.m += wm;
  };
  auto spread = [&](const NameKey& name, const ContextKey& ctx, double weight, double p_f) {
    // split one stratum across a couple of rows/sources
    const int pieces = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < pieces; ++k)
      deposit(name, ctx, weight * p_f / pieces, weight * (1.0 - p_f) / pieces);
  };

  for (std::size_t i = 0; i < n_names; ++i) {
    const NameKey name = fuzz_name(i);
    const std::size_t ia = rng() % countries.size();
    const std::size_t ib = (ia + 1 + rng() % (countries.size() - 1)) % countries.size();
    const std::string& ca = countries[ia];
    const std::string& cb = countries[ib];
    const std::size_t ja = rng() % decades.size();
    const std::size_t jb = (ja + 1 + rng() % (decades.size() - 1)) % decades.size();
    const int da = decades[ja];
    const int db = decades[jb];
    switch (archetype_of(i)) {
      case Archetype::StrongFemaleHigh: {
        const double w = 20.0 + unif(rng) * 2000.0;
        spread(name, {ca, da}, w, 0.96 + 0.04 * unif(rng));
        if (unif(rng) < 0.5) spread(name, {std::string(kUnknownCountry), kUnknownDecade},
                                    1.0 + unif(rng) * 5.0, 0.97);
        break;
      }
      case Archetype::StrongMaleLow: {
        const double w = 1.0 + unif(rng) * 7.0;  // below the coverage threshold
        spread(name, {ca, kUnknownDecade}, w, 0.02 * unif(rng));
        break;
      }
      case Archetype::CountryConditional: {
        const double w = 30.0 + unif(rng) * 300.0;
        spread(name, {ca, da}, w * 0.5, 0.95 + 0.04 * unif(rng));
        spread(name, {cb, db}, w * 0.5, 0.01 + 0.04 * unif(rng));
        break;
      }
      case Archetype::DecadeConditional: {
        // same countries both eras so country conditioning stays weak
        const double w = 30.0 + unif(rng) * 300.0;
        spread(name, {ca, da}, w * 0.25, 0.95);
        spread(name, {cb, da}, w * 0.25, 0.95);
        spread(name, {ca, db}, w * 0.25, 0.05);
        spread(name, {cb, db}, w * 0.25, 0.05);
        break;
      }
      case Archetype::Weak: {
        const double w = 15.0 + unif(rng) * 200.0;
        const double p = 0.42 + 0.16 * unif(rng);
        spread(name, {ca, da}, w * 0.6, p);
        spread(name, {cb, db}, w * 0.4, p);
        if (unif(rng) < 0.3)
          spread(name, {std::string(kUnknownCountry), kUnknownDecade}, 2.0, 0.5);
        break;
      }
      case Archetype::JointOnly: {
        // XOR pattern: pure within each (country, decade) cell, balanced in
        // every marginal
        const double w = 20.0 + unif(rng) * 100.0;
        spread(name, {ca, da}, w * 0.25, 1.0);
        spread(name, {ca, db}, w * 0.25, 0.0);
        spread(name, {cb, da}, w * 0.25, 0.0);
        spread(name, {cb, db}, w * 0.25, 1.0);
        break;
      }
    }
  }

  std::vector<SourceTable> nonempty;
  for (SourceTable& s : sources)
    if (!s.entries.empty()) nonempty.push_back(std::move(s));
  return build_name_table(nonempty);
}

}  // namespace nomen::testing
