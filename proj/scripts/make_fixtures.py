#!/usr/bin/env python3
"""Regenerates the bundled fixture corpus under data/fixtures/.

Six reference sources in the standardized TSV format, ~2600 unique names:
a few hundred common given names plus a synthetic long tail, with planted
context structure (country-conditional, decade-conditional, weak, and
low-coverage names) so every taxonomy leaf is populated. Fully deterministic
for a fixed seed; rerunning this script must reproduce the committed files
byte for byte.
"""

import math
import os
import random

SEED = 20240809
OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "fixtures")
SAMPLE_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "samples")

FEMALE = """
anna maria emma olivia sophia isabella mia charlotte amelia evelyn abigail
emily elizabeth sofia victoria grace chloe camila penelope riley layla nora
zoey mila aria scarlett luna ella hazel aurora violet stella natalie leah
hannah addison lucy eleanor audrey savannah brooklyn bella claire skylar lily
sarah sara karen nancy lisa betty margaret sandra ashley kimberly donna carol
michelle laura amanda melissa deborah stephanie rebecca sharon cynthia
kathleen ruth shirley amy angela helen anita alice judith julie olga irene
teresa doris gloria evelina jean jeanne marie francoise brigitte catherine
sylvie isabelle nathalie monique celine camille margaux ines lea manon oceane
maja ida alma frida signe astrid ingrid solveig liv thea nora sigrid ronja
elsa alva vera selma agnes ebba moa wilma tuva saga aino aada helmi venla
sofie freja laerke ane mette kirsten birgit agnieszka katarzyna malgorzata
magdalena zofia hanna alicja maja lena yuki sakura hina aoi rin mei yua akari
himari honoka mio fatima aisha amina layal zainab khadija noor salma yasmin
leila priya ananya diya aanya saanvi isha kavya meera pooja rani devi lakshmi
mingzhu xiaoli liling meilin jiayi shanshan rosa carmen josefa dolores pilar
lucia martina paula alba julia irina svetlana natalia tatiana ekaterina
galina lyudmila valentina oksana dariya adriana fernanda juliana leticia
gabriela beatriz larissa camilla chiara giulia alessia francesca valentina
elena bianca ilaria serena francisca antonia valentina
""".split()

MALE = """
james john robert michael william david richard joseph thomas charles
christopher daniel matthew anthony mark donald steven paul andrew joshua
kenneth kevin brian george timothy ronald edward jason jeffrey ryan jacob
gary nicholas eric jonathan stephen larry justin scott brandon benjamin
samuel gregory frank alexander raymond patrick jack dennis jerry tyler aaron
jose adam nathan henry douglas zachary peter kyle ethan walter noah jeremy
christian keith roger terry austin sean gerald carl harold dylan arthur
lawrence jordan jesse bryan billy bruce gabriel logan albert willie alan juan
wayne elijah randy roy vincent ralph eugene russell bobby mason philip louis
pierre jacques michel alain bernard claude francois laurent nicolas olivier
pascal thierry guillaume antoine hugo lucas leo gabin jules raphael mathis
ole lars nils erik gunnar bjorn magnus anders karl sven olav einar haakon
leif ragnar mikko juhani matti antti pekka timo jussi ville eino onni vaino
stanislaw andrzej krzysztof piotr tomasz pawel marek lukasz hiroshi takashi
kenji satoshi kazuo yuta haruto sota ren itsuki kaito asahi minato mohammed
ahmed ali omar hassan ibrahim khalid tariq yusuf hamza karim rajesh amit
sanjay vijay arjun rohan aditya krishnan ramesh suresh ganesh wei ming jun
hao feng lei carlos miguel pedro manuel francisco javier diego alejandro
fernando sergio pablo andres ivan dmitri sergei vladimir nikolai mikhail
alexei boris viktor yuri konstantin marco giovanni giuseppe lorenzo matteo
andrea luca davide simone federico salvatore
""".split()

# Names whose gendered association is weak or context-bound; handled below.
SPECIAL = ["jean", "robin", "andrea", "kim", "leslie", "akira", "casey",
           "jordan", "ashley", "aubrey", "toru", "alexis", "marion", "sasha",
           "nikita", "eden", "noa", "amari", "river", "sage"]

ONSETS = ["b", "br", "c", "d", "dr", "f", "g", "gr", "h", "j", "k", "kl",
          "l", "m", "n", "p", "r", "s", "st", "t", "tr", "v", "w", "y", "z"]
NUCLEI = ["a", "e", "i", "o", "u", "ai", "ea", "ei", "ia", "io", "oa"]
CODAS = ["", "l", "n", "r", "s", "t", "th", "m", "nd", "la", "na", "ra",
         "ta", "lia", "nia", "ron", "vin", "mir", "lin", "den"]

COUNTRIES = ["US", "FR", "NO", "SE", "FI", "DE", "GB", "ES", "IT", "BR",
             "JP", "PL", "TR", "IN", "CA", "AU", "MX", "NL", "RU", "KR"]
DECADES = list(range(1950, 2021, 10))


def tail_names(count, taken):
    rng = random.Random(SEED + 1)
    names = []
    seen = set(taken)
    while len(names) < count:
        name = (rng.choice(ONSETS) + rng.choice(NUCLEI) + rng.choice(CODAS))
        if rng.random() < 0.35:
            name += rng.choice(["a", "o", "e", "i", "us", "en", "el", "is"])
        if 3 <= len(name) <= 11 and name not in seen:
            seen.add(name)
            names.append(name)
    return names


class Name:
    def __init__(self, key, p_f, weight, countries, kind="plain"):
        self.key = key
        self.p_f = p_f          # global inclination
        self.weight = weight    # total observation weight across everything
        self.countries = countries
        self.kind = kind
        self.country_p = {}     # overrides per country
        self.decade_p = {}      # overrides per decade

    def share(self, country, decade):
        if country in self.country_p:
            return self.country_p[country]
        if decade in self.decade_p:
            return self.decade_p[decade]
        return self.p_f


def build_names():
    rng = random.Random(SEED + 2)
    names = {}

    def add(name):
        names[name.key] = name

    for key in FEMALE:
        if key in SPECIAL or key in names:
            continue
        w = math.exp(rng.uniform(2.5, 11.0))
        add(Name(key, rng.uniform(0.955, 0.999), w,
                 rng.sample(COUNTRIES, rng.randint(2, 6))))
    for key in MALE:
        if key in SPECIAL or key in names:
            continue
        w = math.exp(rng.uniform(2.5, 11.0))
        add(Name(key, rng.uniform(0.001, 0.045), w,
                 rng.sample(COUNTRIES, rng.randint(2, 6))))

    # context-bound anchors
    jean = Name("jean", 0.5, 60000.0, ["FR", "US", "CA", "GB"], "country")
    jean.country_p = {"FR": 0.035, "CA": 0.08, "US": 0.93, "GB": 0.91}
    add(jean)
    robin = Name("robin", 0.5, 18000.0, ["GB", "US", "SE"], "country")
    robin.country_p = {"GB": 0.06, "SE": 0.08, "US": 0.92}
    add(robin)
    andrea = Name("andrea", 0.5, 30000.0, ["IT", "US", "DE", "ES"], "country")
    andrea.country_p = {"IT": 0.03, "US": 0.95, "DE": 0.94, "ES": 0.93}
    add(andrea)
    toru = Name("toru", 0.08, 2500.0, ["JP"], "plain")
    add(toru)
    alexis = Name("alexis", 0.5, 22000.0, ["US", "FR", "GB"], "country")
    alexis.country_p = {"US": 0.91, "FR": 0.07, "GB": 0.12}
    add(alexis)
    ashley = Name("ashley", 0.5, 40000.0, ["US", "GB", "CA"], "decade")
    ashley.decade_p = {1950: 0.06, 1960: 0.08, 1970: 0.35,
                       1980: 0.93, 1990: 0.97, 2000: 0.96, 2010: 0.95}
    add(ashley)
    aubrey = Name("aubrey", 0.5, 15000.0, ["US", "GB"], "decade")
    aubrey.decade_p = {1950: 0.05, 1960: 0.06, 1970: 0.10,
                       1980: 0.55, 1990: 0.80, 2000: 0.94, 2010: 0.96}
    add(aubrey)
    marion = Name("marion", 0.5, 9000.0, ["FR", "US"], "decade")
    marion.decade_p = {1950: 0.25, 1960: 0.30, 1970: 0.45,
                       1980: 0.75, 1990: 0.93, 2000: 0.95, 2010: 0.95}
    add(marion)
    for key, p in [("kim", 0.52), ("leslie", 0.58), ("akira", 0.45),
                   ("casey", 0.44), ("jordan", 0.42), ("sasha", 0.55),
                   ("nikita", 0.47), ("eden", 0.56), ("noa", 0.54),
                   ("amari", 0.50), ("river", 0.43), ("sage", 0.57)]:
        add(Name(key, p, math.exp(rng.uniform(5.0, 9.0)),
                 rng.sample(COUNTRIES, rng.randint(3, 6)), "weak"))

    for key in tail_names(2200, set(names)):
        roll = rng.random()
        w = math.exp(rng.uniform(0.0, 8.5))
        cs = rng.sample(COUNTRIES, rng.randint(1, 4))
        if roll < 0.42:
            name = Name(key, rng.uniform(0.95, 0.999), w, cs)
        elif roll < 0.84:
            name = Name(key, rng.uniform(0.001, 0.05), w, cs)
        elif roll < 0.90:
            name = Name(key, rng.uniform(0.40, 0.60), w, cs, "weak")
        elif roll < 0.95 and len(cs) >= 2:
            name = Name(key, 0.5, max(w, 40.0), cs, "country")
            half = max(1, len(cs) // 2)
            for c in cs[:half]:
                name.country_p[c] = rng.uniform(0.93, 0.99)
            for c in cs[half:]:
                name.country_p[c] = rng.uniform(0.01, 0.07)
        else:
            name = Name(key, 0.5, max(w, 40.0), cs, "decade")
            flip = rng.choice([1970, 1980, 1990])
            hi, lo = rng.uniform(0.93, 0.99), rng.uniform(0.01, 0.07)
            for d in DECADES:
                name.decade_p[d] = lo if d < flip else hi
        add(name)
    return list(names.values())


def split_counts(rng, total, share):
    f = total * share
    m = total - f
    fi = int(round(f))
    mi = int(round(m))
    # keep at least one observation on the majority side
    if fi == 0 and mi == 0:
        if share >= 0.5:
            fi = 1
        else:
            mi = 1
    return fi, mi


ACCENTED = {"jose": "josé", "francois": "françois", "renee": "renée",
            "bjorn": "bjørn", "francoise": "françoise", "lukasz": "łukasz",
            "zofia": "żofia", "celine": "céline", "andres": "andrés",
            "laerke": "lærke", "vaino": "väinö"}


def main():
    rng = random.Random(SEED + 3)
    names = build_names()
    names.sort(key=lambda n: n.key)

    sources = {
        "us_births": [],
        "fr_insee": [],
        "nordic_names": [],
        "global_notables": [],
        "athlete_roster": [],
        "en_wordlist": [],
    }

    for name in names:
        popular = name.weight >= 100.0
        raw = name.key
        # registries carry the local spelling for a handful of names
        accented = ACCENTED.get(name.key)

        if "US" in name.countries or (popular and name.kind in ("plain", "weak")):
            ds = rng.sample(DECADES, rng.randint(2, len(DECADES))) if popular \
                else rng.sample(DECADES, 1)
            share_us = 0.55 if popular else 1.0
            for d in sorted(ds):
                total = max(1.0, name.weight * share_us * rng.uniform(0.5, 1.5) / len(ds))
                fi, mi = split_counts(rng, total, name.share("US", d))
                if fi or mi:
                    sources["us_births"].append((raw, d, "US", fi, mi))
        if "FR" in name.countries:
            ds = sorted(rng.sample(DECADES, rng.randint(1, 4)))
            for d in ds:
                total = max(1.0, name.weight * 0.2 * rng.uniform(0.5, 1.5) / len(ds))
                fi, mi = split_counts(rng, total, name.share("FR", d))
                if fi or mi:
                    sources["fr_insee"].append((accented or raw, d, "FR", fi, mi))
        nordic = [c for c in name.countries if c in ("NO", "SE", "FI")]
        for c in nordic:
            d = rng.choice(DECADES)
            total = max(1.0, name.weight * 0.1)
            fi, mi = split_counts(rng, total, name.share(c, d))
            if fi or mi:
                sources["nordic_names"].append((accented or raw, d, c, fi, mi))

        # notable-person compendium: skewed male 3:1, no decades, some
        # unknown countries. Context-bound names get rows for every one of
        # their countries so each stratum carries real mass.
        def notable_row(c, total):
            p = name.share(c if c != "--" else None, None)
            f = total * p
            m = (total - f) * 3.0
            fi, mi = int(round(f)), int(round(m))
            if fi == 0 and mi == 0:
                fi, mi = split_counts(rng, 1.0, p)
            if fi or mi:
                sources["global_notables"].append((raw, "-", c, fi, mi))

        if name.kind == "country":
            per = max(1.0, name.weight * 0.3 / len(name.countries))
            for c in name.countries:
                notable_row(c, per * rng.uniform(0.7, 1.3))
        elif popular or rng.random() < 0.5:
            cs = name.countries + (["--"] if rng.random() < 0.35 else [])
            notable_row(rng.choice(cs), max(1.0, name.weight * 0.02))

        if rng.random() < 0.30:
            c = rng.choice(name.countries)
            d = rng.choice(DECADES)
            p = name.share(c, d)
            total = max(1.0, name.weight * 0.005)
            f = total * p
            m = (total - f) * 2.5
            fi, mi = int(round(f)), int(round(m))
            if fi == 0 and mi == 0:
                fi, mi = split_counts(rng, 1.0, p)
            if fi or mi:
                sources["athlete_roster"].append((raw, d, c, fi, mi))

        # count-free name list: membership only, weight 1 per list
        if rng.random() < 0.65:
            p = name.p_f if not name.country_p else 0.5
            if name.kind == "weak" or 0.25 < p < 0.75:
                sources["en_wordlist"].append((raw, "-", "--", 1, 1))
            elif p >= 0.75:
                sources["en_wordlist"].append((raw, "-", "--", 1, 0))
            else:
                sources["en_wordlist"].append((raw, "-", "--", 0, 1))

    os.makedirs(OUT_DIR, exist_ok=True)
    for source_id, rows in sources.items():
        rows.sort()
        path = os.path.join(OUT_DIR, source_id + ".tsv")
        with open(path, "w", encoding="utf-8", newline="\n") as out:
            out.write("name\tdecade\tcountry\twf\twm\n")
            for raw, decade, country, fi, mi in rows:
                out.write(f"{raw}\t{decade}\t{country}\t{fi}\t{mi}\n")
        print(f"{source_id}: {len(rows)} rows")

    # demo query list and labeled sample for the README walkthrough
    os.makedirs(SAMPLE_DIR, exist_ok=True)
    rng2 = random.Random(SEED + 4)
    queryable = [n for n in names if n.weight >= 5.0]
    picks = rng2.sample(queryable, 260)
    with open(os.path.join(SAMPLE_DIR, "queries.txt"), "w", newline="\n") as out:
        for n in picks[:40]:
            out.write(n.key + "\n")
        out.write("zzyzx\nqwrtplk\n")  # absent from every source
    with open(os.path.join(SAMPLE_DIR, "labeled.tsv"), "w", newline="\n") as out:
        out.write("name\tlabel\tcountry\n")
        for n in picks:
            country = rng2.choice(n.countries)
            p = n.share(country, rng2.choice(DECADES))
            label = "F" if rng2.random() < p else "M"
            out.write(f"{n.key}\t{label}\t{country}\n")
        for key in ("zzyzx", "qwrtplk", "xxaaqq"):
            out.write(f"{key}\tM\t--\n")
    print("samples written")

    unique = len({n.key for n in names})
    print(f"unique names: {unique}")


if __name__ == "__main__":
    main()
