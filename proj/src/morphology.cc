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

#include "gfgen/morphology.h"

#include <cctype>
#include <functional>
#include <map>

namespace gfgen {

namespace {

using Table = std::map<std::string, std::string, std::less<>>;

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Applies `fn` to the last word (split on `sep`) and reattaches the prefix.
std::string on_last_word(std::string_view text, char sep,
                         const std::function<std::string(std::string_view)> &fn) {
  size_t cut = text.rfind(sep);
  if (cut == std::string_view::npos) return fn(text);
  return std::string(text.substr(0, cut + 1)) + fn(text.substr(cut + 1));
}

bool consonant_y(std::string_view w) {
  return w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2]);
}

bool sibilant(std::string_view w) {
  return ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") ||
         ends_with(w, "sh");
}

int vowel_groups(std::string_view w) {
  int groups = 0;
  bool in_group = false;
  for (size_t i = 0; i < w.size(); ++i) {
    bool v = is_vowel(w[i]) || (w[i] == 'y' && i > 0);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Final consonant doubles for monosyllabic consonant-vowel-consonant verbs
// ("stop" -> "stopped"), never for w, x or y.
bool doubles_final(std::string_view w) {
  if (w.size() < 3 || vowel_groups(w) != 1) return false;
  char c3 = w[w.size() - 1], c2 = w[w.size() - 2], c1 = w[w.size() - 3];
  return !is_vowel(c3) && c3 != 'w' && c3 != 'x' && c3 != 'y' && is_vowel(c2) && !is_vowel(c1);
}

const Table &irregular_plurals() {
  static const Table t = {
      {"man", "men"},       {"woman", "women"}, {"child", "children"}, {"person", "people"},
      {"foot", "feet"},     {"tooth", "teeth"}, {"mouse", "mice"},     {"goose", "geese"},
      {"species", "species"}, {"series", "series"}, {"sheep", "sheep"}, {"deer", "deer"},
      {"fish", "fish"},
  };
  return t;
}

struct IrregularVerb {
  const char *past;
  const char *participle;
};

const std::map<std::string, IrregularVerb, std::less<>> &irregular_verbs() {
  static const std::map<std::string, IrregularVerb, std::less<>> t = {
      {"be", {"was", "been"}},         {"have", {"had", "had"}},
      {"do", {"did", "done"}},         {"go", {"went", "gone"}},
      {"make", {"made", "made"}},      {"write", {"wrote", "written"}},
      {"know", {"knew", "known"}},     {"take", {"took", "taken"}},
      {"give", {"gave", "given"}},     {"see", {"saw", "seen"}},
      {"find", {"found", "found"}},    {"build", {"built", "built"}},
      {"hold", {"held", "held"}},      {"bring", {"brought", "brought"}},
      {"buy", {"bought", "bought"}},   {"eat", {"ate", "eaten"}},
      {"grow", {"grew", "grown"}},     {"begin", {"began", "begun"}},
      {"speak", {"spoke", "spoken"}},  {"drive", {"drove", "driven"}},
      {"read", {"read", "read"}},      {"say", {"said", "said"}},
      {"teach", {"taught", "taught"}}, {"think", {"thought", "thought"}},
      {"tell", {"told", "told"}},      {"win", {"won", "won"}},
      {"lose", {"lost", "lost"}},      {"leave", {"left", "left"}},
      {"keep", {"kept", "kept"}},      {"sell", {"sold", "sold"}},
      {"feed", {"fed", "fed"}},        {"become", {"became", "become"}},
      {"run", {"ran", "run"}},         {"set", {"set", "set"}},
      {"put", {"put", "put"}},         {"cut", {"cut", "cut"}},
      {"come", {"came", "come"}},      {"get", {"got", "got"}},
      {"mean", {"meant", "meant"}},    {"bear", {"bore", "born"}},
      {"draw", {"drew", "drawn"}},     {"show", {"showed", "shown"}},
      {"lead", {"led", "led"}},        {"spend", {"spent", "spent"}},
      {"choose", {"chose", "chosen"}}, {"fall", {"fell", "fallen"}},
  };
  return t;
}

std::string regular_ed(std::string_view w) {
  std::string s(w);
  if (ends_with(s, "e")) return s + "d";
  if (consonant_y(s)) return s.substr(0, s.size() - 1) + "ied";
  if (doubles_final(s)) return s + s.back() + "ed";
  return s + "ed";
}

}  // namespace

std::string pluralize_noun(std::string_view lemma) {
  return on_last_word(lemma, ' ', [](std::string_view w) -> std::string {
    if (w.empty() || std::isupper(static_cast<unsigned char>(w[0])) ||
        std::isdigit(static_cast<unsigned char>(w[0]))) {
      return std::string(w);
    }
    auto it = irregular_plurals().find(w);
    if (it != irregular_plurals().end()) return it->second;
    std::string s(w);
    if (consonant_y(s)) return s.substr(0, s.size() - 1) + "ies";
    if (sibilant(s)) return s + "es";
    return s + "s";
  });
}

std::string inflect_verb_3sg(std::string_view lemma) {
  return on_last_word(lemma, '_', [](std::string_view w) -> std::string {
    if (w == "have") return "has";
    if (w == "be") return "is";
    if (w == "do") return "does";
    std::string s(w);
    if (consonant_y(s)) return s.substr(0, s.size() - 1) + "ies";
    if (sibilant(s) || ends_with(s, "o")) return s + "es";
    return s + "s";
  });
}

std::string past_tense(std::string_view lemma) {
  return on_last_word(lemma, '_', [](std::string_view w) -> std::string {
    auto it = irregular_verbs().find(w);
    if (it != irregular_verbs().end()) return it->second.past;
    return regular_ed(w);
  });
}

std::string past_participle(std::string_view lemma) {
  return on_last_word(lemma, '_', [](std::string_view w) -> std::string {
    auto it = irregular_verbs().find(w);
    if (it != irregular_verbs().end()) return it->second.participle;
    return regular_ed(w);
  });
}

std::string present_participle(std::string_view lemma) {
  return on_last_word(lemma, '_', [](std::string_view w) -> std::string {
    std::string s(w);
    if (s == "be") return "being";
    if (ends_with(s, "ie")) return s.substr(0, s.size() - 2) + "ying";
    if (ends_with(s, "e") && !ends_with(s, "ee") && !ends_with(s, "ye") &&
        !ends_with(s, "oe") && s.size() > 2) {
      return s.substr(0, s.size() - 1) + "ing";
    }
    if (doubles_final(s)) return s + s.back() + "ing";
    return s + "ing";
  });
}

std::string singularize_noun(std::string_view plural) {
  return on_last_word(plural, ' ', [](std::string_view w) -> std::string {
    for (const auto &[sg, pl] : irregular_plurals()) {
      if (pl == w) return sg;
    }
    std::string s(w);
    if (ends_with(s, "ies") && s.size() > 3) return s.substr(0, s.size() - 3) + "y";
    if (ends_with(s, "es") && sibilant(s.substr(0, s.size() - 2))) return s.substr(0, s.size() - 2);
    if (ends_with(s, "s") && !ends_with(s, "ss") && s.size() > 1) return s.substr(0, s.size() - 1);
    return s;
  });
}

std::string verb_lemma_from_3sg(std::string_view form) {
  return on_last_word(form, '_', [](std::string_view w) -> std::string {
    if (w == "has") return "have";
    if (w == "is") return "be";
    if (w == "does") return "do";
    if (w == "goes") return "go";
    std::string s(w);
    if (ends_with(s, "ies") && s.size() > 3) return s.substr(0, s.size() - 3) + "y";
    if (ends_with(s, "es") && sibilant(s.substr(0, s.size() - 2))) return s.substr(0, s.size() - 2);
    if (ends_with(s, "s") && !ends_with(s, "ss") && s.size() > 1) return s.substr(0, s.size() - 1);
    return s;
  });
}

}  // namespace gfgen
