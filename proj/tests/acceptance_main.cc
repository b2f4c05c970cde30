// Copyright 2026 The gfgen Authors.
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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gfgen/errors.h"
#include "gfgen/eval.h"
#include "gfgen/gf_exporter.h"
#include "gfgen/gf_reader.h"
#include "gfgen/ingest.h"
#include "gfgen/linearizer.h"
#include "gfgen/pipeline.h"
#include "gfgen/structure.h"
#include "gfgen/verbalizer.h"
#include "metric_oracle.h"
#include "test_util.h"

namespace gfgen {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const char *portal : {"people", "mathematics", "food_drink"}) {
    std::istringstream lines(testing::read_data(std::string("corpus/") + portal + "/sentences.tsv"));
    std::string line;
    while (std::getline(lines, line)) {
      out.push_back(std::string("corpus/") + portal + "/" + line.substr(0, line.find('\t')) +
                    ".conllu");
    }
  }
  return out;
}

Grammar fragment(const std::string &file) {
  auto a = analyze_sentence(testing::load_sentence(file));
  if (!a.grammar) throw Error(file + ": " + a.skip_reason);
  return *a.grammar;
}

std::set<std::string> trimmed_lines(const std::string &text) {
  std::set<std::string> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    l.erase(0, l.find_first_not_of(' '));
    out.insert(l);
  }
  return out;
}

Outcome table_fidelity() {
  Outcome o;
  auto start = Clock::now();
  auto parsed = parse_conllu(testing::read_data("bill_plays_a_game.conllu"));
  std::string facts = parsed.size() == 1 ? facts_to_text(parsed[0]) : "";
  double elapsed = seconds_since(start);
  o.require(facts == testing::read_data("bill_plays_a_game.facts"), "fact program differs from golden file");
  o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + "s");
  o.detail = o.pass ? "golden fact program matched in " + std::to_string(elapsed) + "s" : o.detail;
  return o;
}

Outcome structure_suite() {
  Outcome o;
  const std::vector<std::pair<std::string, std::set<StructureAtom>>> cases{
      {"structures/s1_intransitive.conllu", {{1, 1}}},
      {"structures/s2_transitive.conllu", {{1, 1}, {2, 2}}},
      {"structures/s3_control.conllu", {{1, 1}, {3, 3}}},
      {"structures/s4_copular.conllu", {{1, 1}, {4, 2}}},
      {"structures/s5_passive.conllu", {{1, 1}, {5, 2}}},
  };
  for (const auto &[file, expected] : cases) {
    o.require(recognize(testing::load_sentence(file)) == expected, file + " structures differ");
  }
  auto bill = recognize(testing::load_sentence("bill_plays_a_game.conllu"));
  auto chosen = select(bill);
  o.require(chosen && *chosen == StructureAtom{2, 2}, "Bill plays a game does not select structure(2,2)");
  auto files = corpus_files();
  files.push_back("bill_board_game.conllu");
  for (const auto &f : files) {
    auto s = recognize(testing::load_sentence(f));
    o.require(s.empty() || s.count({1, 1}), f + " lacks structure(1,1)");
  }
  if (o.pass) o.detail = "five structures recognized, (2,2) selected, base structure property holds";
  return o;
}

Outcome encoder_golden() {
  Outcome o;
  auto lines = trimmed_lines(render(merge({fragment("bill_board_game.conllu")}), "Bill").concrete_text);
  const std::vector<std::string> expected{
      "Game = mkNP (mkNP popular_board_game_CN ) (ConstructorsEng.mkAdv with_Prep (mkNP "
      "close_friend_CN )) ;",
      "popular_A = mkA \"popular\" ;",
      "popular_AP = mkAP popular_A ;",
      "popular_board_game_CN = mkCN popular_AP board_game_N ;",
      "board_game_N = mkN \"board game\" \"board games\" ;",
      "close_A = mkA \"close\" ;",
      "close_AP = mkAP close_A ;",
      "close_friend_CN = mkCN close_AP friend_N ;",
      "friend_N = mkN \"friend\" \"friends\" ;",
  };
  for (const auto &e : expected) o.require(lines.count(e) > 0, "missing line: " + e);
  if (o.pass) o.detail = "Game line and eight opers present";
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::string bill = regenerate(fragment("bill_plays_a_game.conllu"));
  o.require(bill == "Bill plays game", "Bill plays a game linearized as \"" + bill + "\"");
  Grammar people = read_grammar({testing::read_data("People.gf"), testing::read_data("PeopleEng.gf")});
  std::string soccer = linearize(people, "simple_sent Bill Play Soccer");
  o.require(soccer == "Bill plays soccer", "People grammar linearized as \"" + soccer + "\"");
  if (o.pass) o.detail = "\"" + bill + "\", \"" + soccer + "\"";
  return o;
}

std::string single_spaced(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == ' ' && !out.empty() && out.back() == ' ') continue;
    out += c;
  }
  return out;
}

Outcome verbalization() {
  Outcome o;
  const std::string expected = single_spaced(
      "Input of  phylotastic FindScientificNamesFromWeb GET is web link. Type of web link is url. "
      "Output of  phylotastic FindScientificNamesFromWeb GET is scientific names. Output of  "
      "phylotastic FindScientificNamesFromWeb GET is species names. Type of scientific names is "
      "names. Type of species name is names.");
  std::string got = verbalize_atoms(parse_atoms(testing::read_data("phylotastic.atoms")),
                                    load_annotations(testing::read_data("phylotastic.annotations")));
  if (got != expected) {
    size_t i = std::mismatch(got.begin(), got.end(), expected.begin(), expected.end()).first - got.begin();
    size_t from = got.rfind(". ", i);
    from = from == std::string::npos ? 0 : from + 2;
    o.require(false, "description differs at \"" + got.substr(from) + "\" (expected \"" +
                         expected.substr(from) + "\")");
  }
  auto triples = verbalize_triples(parse_triples(testing::read_data("people.triples")),
                                   load_annotations(testing::read_data("people.annotations")));
  o.require(triples == std::vector<std::string>{"Kevin has_pets Flossie.", "Flossie is cow.",
                                                 "Mick reads Daily Mirror."},
            "triple sentences differ");
  if (o.pass) o.detail = "description and triple sentences match";
  return o;
}

Outcome exporter_algebra() {
  Outcome o;
  std::vector<Grammar> frags;
  for (const auto &f : corpus_files()) {
    auto a = analyze_sentence(testing::load_sentence(f));
    if (a.grammar) frags.push_back(*a.grammar);
  }
  frags.push_back(fragment("bill_plays_a_game.conllu"));
  frags.push_back(fragment("bill_board_game.conllu"));
  Grammar merged = merge(frags);
  std::string text = render(merged, "All").concrete_text;
  o.require(render(merge({merged}), "All").concrete_text == text, "merge is not idempotent");
  std::mt19937 rng(11);
  for (int i = 0; i < 5; ++i) {
    auto shuffled = frags;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    o.require(render(merge(shuffled), "All").concrete_text == text, "merge depends on input order");
  }
  auto doubled = frags;
  doubled.insert(doubled.end(), frags.begin(), frags.end());
  Grammar twice = merge(doubled);
  o.require(twice.opers == merged.opers, "duplicate opers were not collapsed");
  Grammar pair = merge({frags.back(), frags.back()});
  o.require(pair.opers == frags.back().opers, "identical fragments did not collapse");
  auto first = render(merged, "All");
  auto second = render(merge(frags), "All");
  o.require(first.abstract_text == second.abstract_text && first.concrete_text == second.concrete_text,
            "render differs between runs");
  if (o.pass) o.detail = std::to_string(frags.size()) + " fragments: idempotent, order-free, collapsing, deterministic";
  return o;
}

bool close_enough(double a, double b) {
  return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

Outcome metric_oracles() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"Bill plays game", "Bill plays a game."},
      {"bill plays a game", "bill plays a game today"},
      {"Bill plays popular board game with close friends",
       "Bill plays a popular board game with his close friends."},
      {"Marie Curie is physicist", "Marie Curie is a physicist."},
      {"beer contains water, malt and hops", "Beer contains water, malt and hops."},
      {"honey spoils never", "Honey never spoils."},
      {"the cat sat on the mat", "the cat is on the mat"},
      {"the the the the", "the cat is on the mat"},
      {"a b c d e f", "f e d c b a"},
      {"prime numbers have two divisors", "A prime number has exactly two divisors."},
      {"Bill wants to play soccer", "Bill wants to play soccer."},
      {"game is played", "The game is played."},
      {"bread requires flour and water", "Bread requires flour and water."},
      {"x y", "x y z w v"},
      {"one two three four five six seven", "one two three"},
      {"circle has radius", "Every circle has a radius."},
      {"she studies radioactivity in Paris", "She studies radioactivity in Paris."},
      {"tea contains caffeine", "Coffee contains caffeine."},
      {"the angle is right angle", "The angle is a right angle."},
      {"cheese is made from milk", "Cheese is made from milk."},
  };
  for (const auto &[h, r] : pairs) {
    auto hyp = score_tokens(h), ref = score_tokens(r);
    bool assessable = false;
    double expected = testing::oracle::oracle_bleu(hyp, ref, &assessable);
    BleuResult b = bleu3(hyp, ref);
    o.require(b.assessable == assessable && close_enough(b.score, expected), "BLEU-3 differs on \"" + h + "\"");
    auto er = testing::oracle::oracle_rouge(hyp, ref);
    RougeScores rs = rouge(hyp, ref);
    o.require(close_enough(rs.rouge1, er[0]) && close_enough(rs.rouge2, er[1]) &&
                  close_enough(rs.rougeL, er[2]),
              "ROUGE differs on \"" + h + "\"");
    RougeScores same = rouge(ref, ref);
    o.require(close_enough(bleu3(ref, ref).score, 100) && close_enough(same.rouge1, 100) &&
                  close_enough(same.rougeL, 100),
              "identity does not score 100 on \"" + r + "\"");
  }
  if (o.pass) o.detail = std::to_string(pairs.size()) + " pairs agree with the reference";
  return o;
}

Outcome corpus_experiment() {
  Outcome o;
  auto start = Clock::now();
  auto reports = run_corpus(testing::data_path("corpus"));
  double elapsed = seconds_since(start);
  std::map<std::string, std::pair<int, int>> counts;
  for (const auto &r : reports) {
    counts[r.portal] = {r.n_recognized, r.n_sentences};
    for (const auto &s : r.sentences) {
      if (!s.recognized) continue;
      o.require(s.grammar_problems.empty(), s.id + " grammar does not type-check");
      auto hyp = score_tokens(s.hypothesis), ref = score_tokens(s.reference);
      std::set<std::string> ref_set(ref.begin(), ref.end());
      bool subset = !hyp.empty() && std::all_of(hyp.begin(), hyp.end(),
                                                [&](const auto &t) { return ref_set.count(t) > 0; });
      o.require(subset, s.id + " regenerated \"" + s.hypothesis + "\" is not a token subset");
    }
  }
  o.require(counts["mathematics"] == std::make_pair(22, 24), "mathematics recognition differs from 22 of 24");
  o.require(counts["people"] == std::make_pair(15, 15), "people recognition differs from 15 of 15");
  o.require(counts["food_drink"] == std::make_pair(23, 23), "food_drink recognition differs from 23 of 23");
  o.require(elapsed < 10.0, "corpus took " + std::to_string(elapsed) + "s");
  if (o.pass) {
    std::ostringstream d;
    d << "recognized people " << counts["people"].first << "/" << counts["people"].second
      << ", mathematics " << counts["mathematics"].first << "/" << counts["mathematics"].second
      << ", food_drink " << counts["food_drink"].first << "/" << counts["food_drink"].second
      << " in " << elapsed << "s";
    o.detail = d.str();
  }
  return o;
}

}  // namespace
}  // namespace gfgen

int main(int argc, char **argv) {
  using gfgen::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table fidelity", gfgen::table_fidelity},
      {"structure suite", gfgen::structure_suite},
      {"encoder golden", gfgen::encoder_golden},
      {"round trip", gfgen::round_trip},
      {"verbalization", gfgen::verbalization},
      {"exporter algebra", gfgen::exporter_algebra},
      {"metric oracles", gfgen::metric_oracles},
      {"corpus experiment", gfgen::corpus_experiment},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "usage: gfgen_acceptance [--criterion N]\n";
    return 2;
  }
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << o.detail << ")\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
