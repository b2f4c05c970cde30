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

// Command-line front end: ingest, synthesize, export, linearize,
// verbalize and eval.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gfgen/components.h"
#include "gfgen/errors.h"
#include "gfgen/eval.h"
#include "gfgen/gf_exporter.h"
#include "gfgen/gf_reader.h"
#include "gfgen/ingest.h"
#include "gfgen/linearizer.h"
#include "gfgen/pipeline.h"
#include "gfgen/rule_engine.h"
#include "gfgen/verbalizer.h"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gfgen::Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path &path, const std::string &text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gfgen::Error("cannot write " + path.string());
  out << text;
}

gfgen::Grammar load_grammar(const std::vector<std::string> &files) {
  std::vector<std::string> gf_sources;
  std::vector<gfgen::Grammar> json_grammars;
  for (const auto &f : files) {
    if (fs::path(f).extension() == ".json") {
      json_grammars.push_back(gfgen::grammar_from_json(read_file(f)));
    } else {
      gf_sources.push_back(read_file(f));
    }
  }
  if (!gf_sources.empty() && !json_grammars.empty()) {
    throw gfgen::Error("give either .gf files or .json grammars, not both");
  }
  if (!gf_sources.empty()) return gfgen::read_grammar(gf_sources);
  if (json_grammars.size() == 1) return json_grammars.front();
  return gfgen::merge(json_grammars);
}

void print_chunk(const gfgen::SentenceFacts &facts, const gfgen::Chunk &chunk, int depth) {
  for (const auto &m : chunk.attachments) {
    std::cout << std::string(2 * depth, ' ') << gfgen::complement_kind_name(m.link.kind) << " "
              << facts.token(m.chunk.head).surface << "\n";
    print_chunk(facts, m.chunk, depth + 1);
  }
}

int cmd_ingest(const std::string &path) {
  bool first = true;
  for (const auto &s : gfgen::parse_conllu(read_file(path))) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << gfgen::facts_to_text(s);
  }
  return 0;
}

struct SynthesizeOptions {
  std::string input;
  std::string out_dir;
  bool dump_structures = false;
  bool dump_components = false;
  bool debug_models = false;
};

int cmd_synthesize(const SynthesizeOptions &o) {
  int skipped = 0;
  for (const auto &facts : gfgen::parse_conllu(read_file(o.input))) {
    gfgen::SentenceAnalysis a = gfgen::analyze_sentence(facts);
    std::cout << "# sentence " << facts.sentence_id << ": " << facts.source_text << "\n";
    if (o.debug_models) {
      gfgen::Model model = gfgen::derive(gfgen::facts_from_sentence(facts),
                                         gfgen::program(gfgen::RuleFamily::kStructures));
      std::cout << gfgen::model_to_text(model);
    }
    if (o.dump_structures) {
      for (const auto &s : a.structures) std::cout << s.to_string() << ".\n";
      if (a.selected) std::cout << "selected " << a.selected->to_string() << "\n";
    }
    if (o.dump_components && a.components) {
      for (const auto &[role, chunk] : a.chunks) {
        std::cout << role << " " << facts.token(chunk.head).surface << "\n";
        print_chunk(facts, chunk, 1);
      }
    }
    if (!a.recognized()) {
      std::cerr << "warning: skipping sentence " << facts.sentence_id << ": " << a.skip_reason << "\n";
      ++skipped;
      continue;
    }
    fs::path out = fs::path(o.out_dir) / (gfgen::sentence_function(*a.grammar).name + ".json");
    write_file(out, gfgen::grammar_to_json(*a.grammar));
    std::cout << "wrote " << out.string() << "\n";
  }
  return skipped ? 3 : 0;
}

int cmd_export(const std::vector<std::string> &fragments, const std::string &out) {
  std::vector<gfgen::Grammar> grammars;
  for (const auto &f : fragments) grammars.push_back(gfgen::grammar_from_json(read_file(f)));
  gfgen::Grammar merged = gfgen::merge(grammars);
  fs::path target(out);
  std::string name = target.filename().string();
  merged.name = name;
  auto problems = gfgen::check_grammar(merged);
  for (const auto &p : problems) std::cerr << "error: " << p << "\n";
  if (!problems.empty()) return 1;
  gfgen::write_grammar_files(merged, target.has_parent_path() ? target.parent_path() : fs::path("."),
                             name);
  return 0;
}

int cmd_linearize(const std::vector<std::string> &files, const std::string &tree, bool period) {
  gfgen::Grammar g = load_grammar(files);
  std::string text = gfgen::linearize(g, tree);
  std::cout << text << (period ? "." : "") << "\n";
  return 0;
}

int cmd_verbalize(const std::string &annotations, const std::string &atoms,
                  const std::string &triples) {
  auto notes = gfgen::load_annotations(read_file(annotations));
  if (!atoms.empty()) {
    std::cout << gfgen::verbalize_atoms(gfgen::parse_atoms(read_file(atoms)), notes) << "\n";
  } else {
    for (const auto &line : gfgen::verbalize_triples(gfgen::parse_triples(read_file(triples)), notes)) {
      std::cout << line << "\n";
    }
  }
  return 0;
}

int cmd_eval(const std::string &corpus, const std::string &report) {
  std::vector<std::string> warnings;
  auto reports = gfgen::run_corpus(corpus, &warnings);
  for (const auto &w : warnings) std::cerr << "warning: " << w << "\n";
  std::string csv = gfgen::report_csv(reports);
  if (!report.empty()) write_file(report, csv);
  std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"gfgen: GF grammar synthesis from dependency parses"};
  app.require_subcommand(1);

  std::string ingest_path;
  auto *ingest = app.add_subcommand("ingest", "Print the fact program of each sentence");
  ingest->add_option("conllu", ingest_path, "CoNLL-U file")->required();

  SynthesizeOptions synth;
  auto *synthesize = app.add_subcommand("synthesize", "Write one grammar fragment per sentence");
  synthesize->add_option("conllu", synth.input, "CoNLL-U file")->required();
  synthesize->add_option("-o,--out", synth.out_dir, "Output directory")->required();
  synthesize->add_flag("--dump-structures", synth.dump_structures, "Print recognized structures");
  synthesize->add_flag("--dump-components", synth.dump_components, "Print components and chunks");
  synthesize->add_flag("--debug-models", synth.debug_models, "Print the structure program's model");

  std::vector<std::string> fragments;
  std::string export_out;
  auto *exp = app.add_subcommand("export", "Merge fragments into <Name>.gf and <Name>Eng.gf");
  exp->add_option("fragments", fragments, "Fragment .json files")->required();
  exp->add_option("-o,--out", export_out, "Output path and grammar name, e.g. out/Paragraph")->required();

  std::vector<std::string> grammar_files;
  std::string tree;
  bool period = false;
  auto *lin = app.add_subcommand("linearize", "Realize an abstract tree in English");
  lin->add_option("--grammar", grammar_files, "Grammar files (.gf pair or .json)")->required();
  lin->add_option("--fun", tree, "Function name or tree, e.g. 'simple_sent Bill Play Soccer'")->required();
  lin->add_flag("--period", period, "Append a period");

  std::string annotations, atoms, triples;
  auto *verb = app.add_subcommand("verbalize", "Describe atoms or triples");
  verb->add_option("--annotations", annotations, "Annotation file")->required();
  auto *atoms_opt = verb->add_option("--atoms", atoms, "Atoms (fact text or JSON)");
  auto *triples_opt = verb->add_option("--triples", triples, "Triples (TSV or JSON)");
  atoms_opt->excludes(triples_opt);
  verb->require_option(2);

  std::string corpus, report;
  auto *ev = app.add_subcommand("eval", "Regenerate a corpus and score it");
  ev->add_option("--corpus", corpus, "Corpus directory")->required();
  ev->add_option("--report", report, "CSV report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) return cmd_ingest(ingest_path);
    if (*synthesize) return cmd_synthesize(synth);
    if (*exp) return cmd_export(fragments, export_out);
    if (*lin) return cmd_linearize(grammar_files, tree, period);
    if (*verb) return cmd_verbalize(annotations, atoms, triples);
    if (*ev) return cmd_eval(corpus, report);
  } catch (const gfgen::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
