// Copyright 2026 The sdgmap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generates the bundled synthetic corpus and validation datasets.
//
//   sdgmap_synth --out data/synthetic [--records 1200] [--seed 7]
//
// Every record draws zero, one or two latent SDG topics. Topic text mixes
// "core" phrases that the bundled query bank targets with related vocabulary
// that it does not, so the query stage misses some topical records. A few
// distractor topics reuse SDG vocabulary in other senses (linguistics
// "poverty of the stimulus", processor "energy efficiency", veterinary
// vaccination) and carry subject codes the queries exclude.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdgmap/classifier.h"
#include "sdgmap/corpus.h"

namespace {

using sdgmap::UniformIndex;

struct Topic {
  int sdg;  // 0 for distractors
  std::vector<std::string> core;
  std::vector<std::string> related;
  // Sentences with {c} (core) and {r} (related) slots.
  std::vector<std::string> sentences;
  std::vector<int> asjc;
  std::string journal;  // specialized journal
};

const std::vector<Topic> &Topics() {
  static const std::vector<Topic> topics = {
      {1,
       {"extreme poverty", "poverty alleviation", "social protection", "microfinance", "poverty line"},
       {"household income", "deprivation", "cash transfers", "welfare", "low-income households", "livelihoods"},
       {"Efforts to alleviate extreme levels of poverty remain uneven across {r}.",
        "We examine access to microfinance for rural {r}.",
        "Programs for {c} reshape {r} in fragile regions.",
        "Social-security systems and {r} buffer shocks to the poor."},
       {3303, 2002, 3312},
       "Journal of Poverty Studies"},
      {2,
       {"food security", "malnutrition", "zero hunger", "smallholder farmers", "crop yields"},
       {"nutrition", "stunting", "harvest", "famine", "dietary diversity", "agricultural extension"},
       {"Persistent {c} among children is linked to {r}.",
        "Smallholder farmers increased crop yields after {r} programs.",
        "We model {r} and {c} under rainfall variability.",
        "Household {r} improved where {c} interventions were sustained."},
       {1102, 1106, 2916},
       "Food Security Review"},
      {3,
       {"maternal mortality", "tuberculosis", "vaccination coverage", "malaria", "universal health coverage"},
       {"patients", "clinical outcomes", "hospital admissions", "infection rates", "primary care", "mortality"},
       {"We report {c} trends and {r} in district hospitals.",
        "Childhood vaccination coverage rose while {r} declined.",
        "Interventions against {c} improved {r}.",
        "A cohort of {r} was followed to assess {c}."},
       {2700, 2725, 2739},
       "Global Health Reports"},
      {4,
       {"quality education", "early childhood education", "literacy", "school enrolment"},
       {"teachers", "curriculum", "students", "classroom practice", "learning outcomes", "pedagogy"},
       {"Early-childhood education programs raised {r}.",
        "We evaluate {c} using data on {r}.",
        "Improving {c} requires investment in {r}.",
        "The Te Whāriki curriculum shaped {r} in early childhood settings."},
       {3304, 3204},
       "Comparative Education Letters"},
      {5,
       {"gender equality", "women's empowerment", "gender-based violence", "child marriage"},
       {"female labour participation", "discrimination", "girls", "equity", "women leaders"},
       {"Policies promoting {c} changed {r}.",
        "We document {c} and its association with {r}.",
        "Reducing child marriage improved schooling for {r}.",
        "Survey data reveal {r} despite progress on {c}."},
       {3318, 3312},
       "Gender and Society Quarterly"},
      {6,
       {"drinking water", "sanitation", "wastewater treatment", "water scarcity"},
       {"hygiene", "aquifers", "groundwater", "sewage", "water utilities"},
       {"Access to safe drinking water and {r} remains limited.",
        "We assess {c} through {r} monitoring.",
        "Improved sanitation reduced contamination of {r}.",
        "Seasonal {c} stresses {r} in arid basins."},
       {2312, 2305},
       "Water and Sanitation Research"},
      {7,
       {"renewable energy", "solar photovoltaic", "energy efficiency", "clean cooking", "wind power"},
       {"electricity access", "power grids", "turbines", "battery storage", "off-grid households"},
       {"Deployment of renewable energy expanded {r}.",
        "We optimize {c} for {r} in remote villages.",
        "Household energy efficiency gains reduced demand on {r}.",
        "Clean cooking stoves and {r} lowered indoor pollution."},
       {2102, 2105},
       "Renewable Energy Transitions"},
      {8,
       {"decent work", "unemployment", "economic growth", "child labour"},
       {"labour markets", "wages", "informal employment", "productivity", "job creation"},
       {"Youth unemployment persisted despite {r}.",
        "We link {c} to {r} in emerging economies.",
        "Eliminating child labour requires {r}.",
        "Sustained {c} depended on {r}."},
       {2002, 1408},
       "Labour and Development Journal"},
      {9,
       {"sustainable infrastructure", "industrialization", "broadband access", "resilient infrastructure"},
       {"manufacturing", "research and development", "transport networks", "small enterprises"},
       {"Investment in resilient infrastructure supported {r}.",
        "We study {c} and {r} in industrial clusters.",
        "Broadband access enabled {r} to reach markets.",
        "Inclusive industrialization depends on {r}."},
       {2215, 2205},
       "Infrastructure and Innovation"},
      {10,
       {"income inequality", "migration", "social inclusion", "remittances"},
       {"gini coefficient", "disparities", "marginalized groups", "migrants", "redistribution"},
       {"Rising income inequality widened {r}.",
        "Remittances sent by {r} smoothed consumption.",
        "We measure {c} with the {r}.",
        "Policies for {c} targeted {r}."},
       {3312, 2002},
       "Inequality Studies"},
      {11,
       {"sustainable cities", "urban planning", "affordable housing", "informal settlements"},
       {"urbanization", "public transport", "municipal services", "housing markets", "urban sprawl"},
       {"Urban planning for sustainable cities must address {r}.",
        "Affordable housing shortages accompany {r}.",
        "We map {c} and {r} across metropolitan regions.",
        "Informal settlements lack {r}."},
       {3305, 3322},
       "Journal of Urban Futures"},
      {12,
       {"circular economy", "food waste", "sustainable consumption", "recycling"},
       {"waste management", "life cycle assessment", "packaging", "resource efficiency", "reuse"},
       {"A circular economy approach reduced {r}.",
        "We quantify food waste with {r}.",
        "Household recycling and {r} were surveyed.",
        "Sustainable consumption patterns depend on {r}."},
       {2308, 1408},
       "Circular Economy Letters"},
      {13,
       {"climate change", "greenhouse gas emissions", "climate adaptation", "carbon capture"},
       {"global warming", "mitigation", "temperature anomalies", "emission pathways", "carbon budgets"},
       {"Climate change impacts intensify {r}.",
        "We estimate greenhouse gas emissions under {r}.",
        "Local climate adaptation plans consider {r}.",
        "Carbon capture could complement {r}."},
       {2306, 1902},
       "Climate Action Review"},
      {14,
       {"marine biodiversity", "ocean acidification", "overfishing", "coral reefs", "marine pollution"},
       {"fisheries", "coastal management", "aquaculture", "marine environment", "seagrass"},
       {"Marine biodiversity declined where {r} was weak.",
        "Ocean acidification threatens {r}.",
        "Overfishing and {r} reshape coastal food webs.",
        "Plastic marine pollution accumulates near {r}."},
       {1104, 2303},
       "Marine Pollution Bulletin"},
      {15,
       {"deforestation", "biodiversity loss", "desertification", "land degradation", "endangered species"},
       {"forest cover", "habitat fragmentation", "ecosystems", "wildlife", "protected areas"},
       {"Deforestation rates accelerated alongside {r}.",
        "We link biodiversity loss to {r}.",
        "Land degradation and desertification reduce {r}.",
        "Endangered species persist within {r}."},
       {2303, 1105},
       "Terrestrial Ecology and Conservation"},
      {16,
       {"armed conflict", "corruption", "rule of law", "human trafficking"},
       {"violence", "governance", "justice systems", "institutions", "peacebuilding"},
       {"Armed conflict eroded {r}.",
        "We analyse corruption in {r}.",
        "Strengthening the rule of law improved {r}.",
        "Human trafficking networks exploit weak {r}."},
       {3320, 3308},
       "Peace and Justice Review"},
      // Distractors.
      {0,
       {"poverty of the stimulus"},
       {"syntax", "language acquisition", "grammar", "child language", "linguistic theory"},
       {"The poverty of the stimulus argument concerns {r}.",
        "We revisit {c} in light of {r}.",
        "Evidence from {r} informs nativist accounts."},
       {1203},
       "Linguistic Inquiry Letters"},
      {0,
       {"energy efficiency"},
       {"processors", "cache hierarchies", "instruction scheduling", "multicore chips", "dynamic voltage scaling"},
       {"We improve energy efficiency of {r}.",
        "Energy-efficiency metrics for {r} are proposed.",
        "Benchmarks of {r} show lower power draw."},
       {1708},
       "Computer Architecture Letters"},
      {0,
       {"vaccination"},
       {"cattle", "livestock", "herd immunity in dairy farms", "poultry", "veterinary practice"},
       {"Vaccination of {r} reduced outbreaks.",
        "We compare vaccination schedules for {r}.",
        "Field trials in {r} were conducted."},
       {3403},
       "Veterinary Vaccines"},
      {0,
       {"quantum error correction"},
       {"qubits", "topological codes", "decoherence", "surface codes", "fault tolerance"},
       {"We present {c} schemes for {r}.",
        "Simulations of {r} show improved thresholds.",
        "Decoders for {r} are benchmarked."},
       {3107, 1703},
       "Quantum Information Letters"},
      {0,
       {"protein folding"},
       {"molecular dynamics", "structure prediction", "amino acids", "free energy landscapes"},
       {"We study {c} with {r}.",
        "Accurate {r} accelerates drug design.",
        "Café-style coarse graining of {r} is explored."},
       {1312, 1303},
       "Structural Biology Reports"},
  };
  return topics;
}

const std::vector<std::string> kFiller = {
    "This study uses a mixed-methods design.", "Results are robust to alternative specifications.",
    "We discuss implications for policy and practice.", "Data were collected between 2015 and 2019.",
    "A systematic review of the literature complements the analysis.",
    "The findings highlight significant regional heterogeneity.",
    "We propose a framework and evaluate it on several case studies.",
    "Limitations and directions for future research are outlined."};

const std::vector<std::string> kGeneralJournals = {"PLOS One", "Scientific Reports", "Sustainability",
                                                   "Heliyon", "Frontiers in Science"};
const std::vector<std::string> kRegions = {"sub-Saharan Africa", "South Asia", "Latin America",
                                           "Southeast Asia", "the Pacific Islands", "Eastern Europe",
                                           "Aotearoa New Zealand"};

class Generator {
 public:
  explicit Generator(uint64_t seed) : rng_(seed) {}

  size_t Pick(size_t n) { return static_cast<size_t>(UniformIndex(rng_, n)); }
  double Uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  template <typename T>
  const T &Choice(const std::vector<T> &items) {
    return items[Pick(items.size())];
  }

  std::string Fill(const std::string &templ, const Topic &t, bool allow_core) {
    std::string out;
    for (size_t i = 0; i < templ.size(); ++i) {
      if (templ.compare(i, 3, "{c}") == 0) {
        out += allow_core ? Choice(t.core) : Choice(t.related);
        i += 2;
      } else if (templ.compare(i, 3, "{r}") == 0) {
        out += Choice(t.related);
        i += 2;
      } else {
        out += templ[i];
      }
    }
    return out;
  }

  std::mt19937_64 &rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Whether a sentence template names a core phrase outside a slot.
bool LiteralCore(const std::string &templ) {
  static const std::vector<std::string> literal = {
      "extreme levels of poverty", "microfinance", "Social-security", "Smallholder farmers",
      "vaccination coverage", "Early-childhood education", "child marriage", "drinking water",
      "sanitation", "renewable energy", "energy efficiency", "Clean cooking", "unemployment",
      "child labour", "resilient infrastructure", "Broadband", "industrialization",
      "income inequality", "Remittances", "Urban planning", "Affordable housing", "Informal settlements",
      "circular economy", "food waste", "recycling", "Sustainable consumption", "Climate change",
      "greenhouse gas", "climate adaptation", "Carbon capture", "Marine biodiversity",
      "Ocean acidification", "Overfishing", "marine pollution", "Deforestation", "biodiversity loss",
      "desertification", "Endangered species", "Armed conflict", "corruption", "rule of law",
      "Human trafficking", "poverty of the stimulus", "Energy-efficiency", "Vaccination",
      "Te Whāriki"};
  for (const auto &l : literal) {
    if (templ.find(l) != std::string::npos) return true;
  }
  return false;
}

const std::vector<std::string> kSharedSentences = {"We examine {r} and {r} in this setting.",
                                                   "Changes in {r} were tracked over time."};

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generate the synthetic SDG mapping corpus"};
  std::string out_dir = "data/synthetic";
  size_t count = 1200;
  uint64_t seed = 7;
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--records", count, "Number of records");
  app.add_option("--seed", seed, "Random seed");
  CLI11_PARSE(app, argc, argv);

  Generator g(seed);
  const auto &topics = Topics();
  std::vector<size_t> sdg_topics, distractors;
  for (size_t i = 0; i < topics.size(); ++i) (topics[i].sdg ? sdg_topics : distractors).push_back(i);

  std::vector<sdgmap::PublicationRecord> records;
  std::vector<std::vector<size_t>> latent;
  std::vector<std::string> record_journal_topic;
  for (size_t n = 0; n < count; ++n) {
    std::vector<size_t> chosen;
    double u = g.Uniform();
    if (u < 0.30) {
      chosen.push_back(g.Choice(distractors));
    } else {
      chosen.push_back(g.Choice(sdg_topics));
      if (u > 0.85) {
        size_t second = g.Choice(sdg_topics);
        if (second != chosen[0]) chosen.push_back(second);
      }
    }
    const Topic &main = topics[chosen[0]];
    // About one in eight topical records avoid every core phrase.
    bool hidden = main.sdg != 0 && g.Uniform() < 0.12;

    sdgmap::PublicationRecord r;
    char id[16];
    std::snprintf(id, sizeof id, "rec%05zu", n + 1);
    r.id = id;
    std::string title_phrase = hidden ? g.Choice(main.related) : g.Choice(main.core);
    title_phrase[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(title_phrase[0])));
    switch (g.Pick(4)) {
      case 0:
        r.title = title_phrase + " in " + g.Choice(kRegions) + ": a longitudinal analysis";
        break;
      case 1:
        r.title = title_phrase + " and " + g.Choice(main.related) + " - evidence from " + g.Choice(kRegions);
        break;
      case 2:
        r.title = "Assessing " + g.Fill("{r}", main, false) + " through the lens of " +
                  (hidden ? g.Choice(main.related) : g.Choice(main.core));
        break;
      default:
        r.title = title_phrase;
        break;
    }

    std::string abstract;
    for (size_t t = 0; t < chosen.size(); ++t) {
      const Topic &topic = topics[chosen[t]];
      bool topic_hidden = t == 0 ? hidden : false;
      size_t sentences = 2 + g.Pick(2);
      for (size_t s = 0; s < sentences; ++s) {
        std::string templ = g.Uniform() < 0.3 ? g.Choice(kSharedSentences) : g.Choice(topic.sentences);
        if (topic_hidden && LiteralCore(templ)) templ = g.Choice(kSharedSentences);
        abstract += g.Fill(templ, topic, !topic_hidden) + " ";
      }
    }
    abstract += g.Choice(kFiller) + " " + g.Choice(kFiller);
    r.abstract = abstract;

    size_t nkw = 2 + g.Pick(3);
    std::set<std::string> kws;
    for (size_t k = 0; k < nkw; ++k) {
      const Topic &topic = topics[chosen[g.Pick(chosen.size())]];
      kws.insert(hidden ? g.Choice(topic.related)
                        : (g.Uniform() < 0.5 ? g.Choice(topic.core) : g.Choice(topic.related)));
    }
    r.author_keywords.assign(kws.begin(), kws.end());

    double jr = g.Uniform();
    r.journal_name = jr < 0.35 ? main.journal : g.Choice(kGeneralJournals);
    if (jr >= 0.35 && jr < 0.40) r.journal_name = "  " + main.journal + " ";  // whitespace noise
    std::set<int> codes;
    for (size_t t : chosen) codes.insert(g.Choice(topics[t].asjc));
    if (g.Uniform() < 0.2) codes.insert(1000);
    r.asjc_codes.assign(codes.begin(), codes.end());
    if (g.Uniform() < 0.3) {
      std::vector<std::string> terms;
      for (int k = 0; k < 3; ++k) terms.push_back(g.Choice(main.related));
      r.fulltext_terms = terms;
    }
    r.year = 2009 + static_cast<int>(g.Pick(13));

    // Cite earlier records, preferring the same main topic.
    size_t refs = n == 0 ? 0 : g.Pick(5);
    std::set<std::string> cited;
    for (size_t k = 0; k < refs; ++k) {
      size_t target = g.Pick(n);
      if (g.Uniform() < 0.7) {
        for (size_t tries = 0; tries < 20 && latent[target][0] != chosen[0]; ++tries) target = g.Pick(n);
      }
      cited.insert(records[target].id);
    }
    r.references.assign(cited.begin(), cited.end());

    records.push_back(std::move(r));
    latent.push_back(chosen);
  }

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream out(fs::path(out_dir) / "corpus.jsonl");
    for (const auto &r : records) out << sdgmap::RecordToJson(r).dump() << '\n';
  }

  // Gold labels: latent SDG topics.
  auto gold_of = [&](size_t n) {
    std::set<int> gold;
    for (size_t t : latent[n]) {
      if (topics[t].sdg) gold.insert(topics[t].sdg);
    }
    return gold;
  };

  // Multi-label reference set over a seeded subset of topical records.
  {
    std::vector<size_t> topical;
    for (size_t n = 0; n < records.size(); ++n) {
      if (!gold_of(n).empty()) topical.push_back(n);
    }
    auto subset = sdgmap::SampleWithoutReplacement(topical, 400, g.rng());
    std::sort(subset.begin(), subset.end());
    std::ofstream out(fs::path(out_dir) / "synth_multi.jsonl");
    for (size_t n : subset) out << nlohmann::json{{"id", records[n].id}, {"gold", gold_of(n)}}.dump() << '\n';
  }
  // Journal-based recall set: every record of a specialized journal is
  // labeled with that journal's SDG, relevant or not.
  {
    std::ofstream out(fs::path(out_dir) / "synth_journal_recall.jsonl");
    for (size_t n = 0; n < records.size(); ++n) {
      for (const Topic &t : topics) {
        if (t.sdg && sdgmap::NormalizeJournalName(records[n].journal_name) ==
                         sdgmap::NormalizeJournalName(t.journal)) {
          out << nlohmann::json{{"id", records[n].id}, {"gold", {t.sdg}}}.dump() << '\n';
        }
      }
    }
  }
  // Inline-record dataset of title/description course entries.
  {
    std::ofstream out(fs::path(out_dir) / "synth_courses.jsonl");
    const int sdgs[] = {4, 13, 14};
    for (int i = 0; i < 3; ++i) {
      const Topic &t = topics[static_cast<size_t>(sdgs[i] - 1)];
      nlohmann::json line = {{"id", "course" + std::to_string(i + 1)},
                             {"title", "Introduction to " + t.core[0]},
                             {"description", g.Fill(t.sentences[0], t, true)},
                             {"gold", {t.sdg}}};
      out << line.dump() << '\n';
    }
  }
  std::cout << "wrote " << records.size() << " records to " << out_dir << '\n';
  return 0;
}
