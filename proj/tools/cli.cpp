// Copyright 2026 The Authors.
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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "osforest/characters.hpp"
#include "osforest/forms.hpp"
#include "osforest/local_system.hpp"
#include "osforest/os_algebra.hpp"
#include "osforest/verify.hpp"

namespace osforest::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxEnumerationN = 6;
constexpr int kMaxFormN = 4;
constexpr long kMaxGroupOrder = 100000;

struct Options {
  int r = 1;
  int n = 0;
  int k = -1;
  int l = -1;
  long s = 1;
  int m = 1;
  std::string weights;
  std::string forest;
  std::string pairs;
  std::string format = "json";
  std::string check;
  bool rectified = false;
  bool module = false;
  bool allow_large = false;
};

// Rendered output: the JSON document plus optional text and LaTeX forms.
struct Document {
  Json json;
  std::string text;
  std::string latex;
};

void guard_n(const Options& o, int n, int limit, const char* what) {
  if (!o.allow_large && n > limit) {
    throw SizeGuardError(std::string(what) + " is limited to n <= " + std::to_string(limit) +
                         " (pass --allow-large to override)");
  }
}

long max_order(const Options& o) { return o.allow_large ? LONG_MAX : kMaxGroupOrder; }

void require_n(const Options& o) {
  if (o.n < 1) throw ValidationError("--n must be at least 1");
}

std::vector<Rational> weights(const Options& o) {
  if (o.weights.empty()) throw ValidationError("--weights is required");
  std::vector<Rational> a = parse_rational_list(o.weights);
  if (o.n > 0 && static_cast<int>(a.size()) != o.n) {
    throw ValidationError("--n " + std::to_string(o.n) + " but " + std::to_string(a.size()) +
                          " weights");
  }
  return a;
}

// --r when given explicitly, else the smallest r making r a_i integral.
WeightVector weight_vector(const Options& o, bool r_given) {
  std::vector<Rational> a = weights(o);
  return r_given ? WeightVector(a, o.r) : WeightVector::with_minimal_r(a);
}

Json rational_list(const std::vector<Rational>& a) {
  Json out = Json::array();
  for (const auto& q : a) out.push_back(to_string(q));
  return out;
}

std::string kl_key(int k, int l) { return std::to_string(k) + "," + std::to_string(l); }

bool kl_matches(const Options& o, const DecoratedForest& f) {
  return (o.k < 0 || f.num_edges() == o.k) && (o.l < 0 || f.num_closed() == o.l);
}

Document trees(const Options& o) {
  require_n(o);
  guard_n(o, o.n, kMaxEnumerationN, "tree enumeration");
  Json list = Json::array();
  std::string text;
  for_each_tree(o.r, o.n, o.rectified, [&](const DecoratedForest& t) {
    list.push_back(t.to_string());
    text += t.to_string() + "\n";
  });
  Json doc{{"r", o.r}, {"n", o.n}, {"rectified", o.rectified}, {"count", list.size()},
           {"trees", list}};
  return {doc, text, ""};
}

Document forests(const Options& o) {
  require_n(o);
  guard_n(o, o.n, kMaxEnumerationN, "forest enumeration");
  Json list = Json::array();
  std::map<std::pair<int, int>, long> counts;
  std::string text;
  for_each_forest(o.r, o.n, o.rectified, [&](const DecoratedForest& f) {
    if (!kl_matches(o, f)) return;
    list.push_back(f.to_string());
    ++counts[{f.num_edges(), f.num_closed()}];
    text += f.to_string() + "\n";
  });
  Json by_kl = Json::object();
  for (const auto& [kl, c] : counts) by_kl[kl_key(kl.first, kl.second)] = c;
  Json doc{{"r", o.r},         {"n", o.n},         {"rectified", o.rectified},
           {"count", list.size()}, {"counts", by_kl}, {"forests", list}};
  return {doc, text, ""};
}

DecoratedForest forest(const Options& o) {
  require_n(o);
  if (o.forest.empty()) throw ValidationError("--forest is required");
  return DecoratedForest::parse(o.forest, o.r, o.n);
}

Document rectify(const Options& o) {
  DecoratedForest f = forest(o);
  Rectifier cache;
  Json terms = Json::array();
  std::string text;
  for (const auto& [g, c] : cache.rectify(f)) {
    terms.push_back(Json::array({g.to_string(), c}));
    if (!text.empty()) text += c < 0 ? " - " : " + ";
    else if (c < 0) text += "-";
    long mag = c < 0 ? -c : c;
    text += (mag == 1 ? "" : std::to_string(mag) + "*") + "[" + g.to_string() + "]";
  }
  if (text.empty()) text = "0";
  Json doc{{"r", o.r}, {"n", o.n}, {"forest", f.to_string()}, {"rectified", terms}};
  return {doc, text + "\n", ""};
}

Document os_reduce(const Options& o) {
  DecoratedForest f = forest(o);
  OSElement x = reduce_alpha(f);
  Json terms = Json::array();
  std::string text, latex;
  for (const auto& [g, c] : x.terms()) {
    terms.push_back(Json::array({g.to_string(), c.to_string()}));
    if (!text.empty()) text += " + ";
    text += "(" + c.to_string() + ")*alpha(" + g.to_string() + ")";
    std::string cl = cyclotomic_latex(c);
    if (!latex.empty() && cl.rfind('-', 0) != 0) latex += "+";
    latex += cl + "\\,\\alpha(" + g.to_string() + ")";
  }
  if (text.empty()) text = latex = "0";
  Json doc{{"r", o.r}, {"n", o.n}, {"forest", f.to_string()}, {"alpha", terms}};
  return {doc, text + "\n", latex + "\n"};
}

Document dims(const Options& o, bool r_given) {
  Json by_kl = Json::object();
  std::map<int, long> by_degree;
  std::string text;
  if (!o.weights.empty()) {
    WeightVector w = weight_vector(o, r_given);
    guard_n(o, w.n(), kMaxEnumerationN, "forest enumeration");
    for (const auto& [kl, c] : admissible_counts(w.a())) {
      by_kl[kl_key(kl.first, kl.second)] = c;
      by_degree[kl.first + kl.second] += c;
      text += "A^{" + kl_key(kl.first, kl.second) + "} " + std::to_string(c) + "\n";
    }
    Json doc{{"n", w.n()}, {"weights", rational_list(w.a())}, {"dims", by_kl}};
    return {doc, text, ""};
  }
  require_n(o);
  guard_n(o, o.n, kMaxEnumerationN, "forest enumeration");
  long total = 0;
  for (int k = 0; k <= o.n; ++k) {
    for (int l = 0; k + l <= o.n; ++l) {
      long d = graded_dimension(o.r, o.n, k, l);
      by_kl[kl_key(k, l)] = d;
      total += d;
      text += "A^{" + kl_key(k, l) + "} " + std::to_string(d) + "\n";
    }
  }
  Json doc{{"r", o.r}, {"n", o.n}, {"dims", by_kl}, {"total", total}};
  return {doc, text, ""};
}

Document betti(const Options& o, bool r_given) {
  WeightVector w = weight_vector(o, r_given);
  guard_n(o, w.n(), kMaxEnumerationN, "forest enumeration");
  Json doc = Json::object();
  std::string text;
  for (const auto& [p, c] : betti_numbers(w.a())) {
    if (c == 0) continue;
    doc[std::to_string(p)] = c;
    text += "H^" + std::to_string(p) + " " + std::to_string(c) + "\n";
  }
  return {doc, text, ""};
}

Document form(const Options& o, bool r_given) {
  WeightVector w = weight_vector(o, r_given);
  guard_n(o, w.n(), kMaxFormN, "symbolic forms");
  if (o.forest.empty()) throw ValidationError("--forest is required");
  DecoratedForest f = DecoratedForest::parse(o.forest, 1, w.n());
  DifferentialForm beta_bar = beta_bar_form(f, w);
  Json b = Json::array();
  for (const auto& e : b_exponents(f, w.a())) b.push_back(e.get_si());
  Json doc{{"n", w.n()},       {"weights", rational_list(w.a())}, {"forest", f.to_string()},
           {"b", b},           {"text", beta_bar.to_string()},    {"latex", beta_bar.to_latex()}};
  return {doc, beta_bar.to_string() + "\n", beta_bar.to_latex() + "\n"};
}

Document generators(const Options& o) {
  std::vector<Rational> a = weights(o);
  guard_n(o, static_cast<int>(a.size()), kMaxEnumerationN, "forest enumeration");
  Json list = Json::array();
  std::string text;
  for (const auto& f : module_generators(a)) {
    list.push_back({{"forest", f.to_string()}, {"degree", f.num_edges()}});
    text += std::to_string(f.num_edges()) + " " + f.to_string() + "\n";
  }
  Json doc{{"weights", rational_list(a)}, {"count", list.size()}, {"generators", list}};
  return {doc, text, ""};
}

// "1,2=1/2;2,3=1" with 1-based vertices.
std::vector<std::vector<Rational>> parse_pairs(const std::string& text, int n) {
  std::vector<std::vector<Rational>> out;
  if (text.empty()) return out;
  out.assign(n, std::vector<Rational>(n, Rational(0)));
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    int i = 0, j = 0;
    char comma = 0, eq = 0;
    std::istringstream is(item);
    if (!(is >> i >> comma >> j >> eq) || comma != ',' || eq != '=') {
      throw ParseError("malformed pair weight '" + item + "'");
    }
    std::string value;
    std::getline(is, value);
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      throw ValidationError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    out[std::min(i, j) - 1][std::max(i, j) - 1] = parse_rational(value);
  }
  return out;
}

Document resonant(const Options& o) {
  std::vector<Rational> a = weights(o);
  Resonance res = is_resonant(a, parse_pairs(o.pairs, static_cast<int>(a.size())));
  Json witness = Json::array();
  for (int v : res.witness) witness.push_back(v + 1);
  Json doc{{"resonant", res.resonant}, {"bullet", res.bullet}, {"witness", witness}};
  return {doc, std::string(res.resonant ? "resonant" : "non-resonant") + "\n", ""};
}

Document character(const Options& o) {
  ClassFunction chi;
  std::string kind;
  Json extra = Json::array();
  if (o.module) {
    require_n(o);
    kind = "module";
    chi = module_character(o.r, o.n, max_order(o));
  } else if (!o.weights.empty()) {
    std::vector<Rational> a = weights(o);
    int n = static_cast<int>(a.size());
    guard_n(o, n, kMaxEnumerationN, "forest enumeration");
    if (wreath_order(1, n) > max_order(o)) throw SizeGuardError("group exceeds the order guard");
    if (o.k < 0 || o.l < 0) throw ValidationError("--k and --l are required");
    kind = "isotypic";
    chi = isotypic_character(a, o.k, o.l);
  } else {
    require_n(o);
    guard_n(o, o.n, kMaxEnumerationN, "forest enumeration");
    if (o.k < 0 || o.l < 0) throw ValidationError("--k and --l are required");
    kind = "os";
    chi = os_character(o.r, o.n, o.k, o.l, max_order(o));
    for (const auto& s : induction_decomposition(o.r, o.n, o.k, o.l)) {
      extra.push_back({{"subgroup", s.subgroup}, {"character", s.character}});
    }
  }
  Json classes = Json::array();
  std::vector<std::array<std::string, 3>> rows;
  std::string latex = "\\begin{array}{|c|c|c|}\n\\hline\n\\text{class}&\\text{size}&\\chi\\\\\n\\hline\n";
  for (const auto& c : conjugacy_classes(chi.r(), chi.n())) {
    const Cyclotomic& v = chi.at(c.label);
    std::string label = class_label_string(c.label);
    classes.push_back({{"label", label}, {"size", to_string(c.size)}, {"value", v.to_string()}});
    rows.push_back({label, to_string(c.size), v.to_string()});
    latex += label + "&" + to_string(c.size) + "&" + cyclotomic_latex(v) + "\\\\\n";
  }
  latex += "\\hline\n\\end{array}\n";
  Json doc{{"r", chi.r()}, {"n", chi.n()}, {"kind", kind}};
  if (kind != "module") {
    doc["k"] = o.k;
    doc["l"] = o.l;
  }
  doc["classes"] = classes;
  if (chi.r() == 1) {
    Json decomposition = Json::object();
    for (const auto& [lambda, mult] : decompose_sn(chi)) decomposition[lambda.to_string()] = to_string(mult);
    doc["decomposition"] = decomposition;
  }
  if (!extra.empty()) doc["induction"] = extra;

  std::size_t w0 = 5, w1 = 4;
  for (const auto& row : rows) {
    w0 = std::max(w0, row[0].size());
    w1 = std::max(w1, row[1].size());
  }
  std::ostringstream text;
  text << std::left << std::setw(static_cast<int>(w0)) << "class" << "  "
       << std::setw(static_cast<int>(w1)) << "size" << "  value\n";
  for (const auto& row : rows) {
    text << std::setw(static_cast<int>(w0)) << row[0] << "  " << std::setw(static_cast<int>(w1))
         << row[1] << "  " << row[2] << "\n";
  }
  return {doc, text.str(), latex};
}

const std::map<std::string, CorollaryCase>& corollary_cases() {
  static const std::map<std::string, CorollaryCase> cases = {
      {"bigindcor", CorollaryCase::kBigInd},   {"otherbigindcor", CorollaryCase::kOtherBigInd},
      {"mysterycor", CorollaryCase::kMystery}, {"combcor", CorollaryCase::kComb},
      {"lsthm", CorollaryCase::kLehrerSolomon}, {"mysterythm", CorollaryCase::kMysteryThm},
  };
  return cases;
}

Document verify(const Options& o, bool* passed) {
  Json doc;
  if (auto it = corollary_cases().find(o.check); it != corollary_cases().end()) {
    CorollaryArgs args{o.r, o.n, std::max(o.k, 0), std::max(o.l, 0), o.s, o.m};
    if (it->second != CorollaryCase::kMysteryThm) require_n(o);
    if (it->second == CorollaryCase::kLehrerSolomon) args.r = 1;
    *passed = verify_corollary(it->second, args, max_order(o));
    doc = Json{{"case", o.check}, {"pass", *passed}};
  } else {
    CheckReport rep = run_check(o.check);
    *passed = rep.pass;
    doc = Json{{"case", rep.name},          {"criterion", rep.id},
               {"pass", rep.pass},          {"detail", rep.detail},
               {"seconds", rep.seconds},    {"limit_seconds", rep.limit_seconds}};
  }
  return {doc, std::string(*passed ? "PASS " : "FAIL ") + o.check + "\n", ""};
}

void emit(const Document& d, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << d.json.dump() << "\n";
  } else if (format == "text") {
    out << (d.text.empty() ? d.json.dump(2) + "\n" : d.text);
  } else if (d.latex.empty()) {
    throw ParseError("LaTeX output is offered for form, os-reduce and character");
  } else {
    out << d.latex;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Orlik-Solomon forests, local systems and characters"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "latex"}));
  app.add_flag("--allow-large", o.allow_large, "Lift the default size guards");

  auto add_rn = [&](CLI::App* sub) {
    sub->add_option("--r", o.r, "Order of the roots of unity")->check(CLI::Range(1, 127));
    sub->add_option("--n", o.n, "Number of vertices")->check(CLI::Range(0, kMaxVertices));
  };
  auto add_kl = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Number of edges")->check(CLI::NonNegativeNumber);
    sub->add_option("--l", o.l, "Number of closed roots")->check(CLI::NonNegativeNumber);
  };
  auto add_weights = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--weights", o.weights, "Exact fractions, e.g. -1/2,-1/2");
    if (required) opt->required();
  };

  auto* trees_cmd = app.add_subcommand("trees", "Labelled trees in T(r, n)");
  add_rn(trees_cmd);
  trees_cmd->add_flag("--rectified", o.rectified, "Rectified trees only");

  auto* forests_cmd = app.add_subcommand("forests", "Decorated forests in F(r, n)");
  add_rn(forests_cmd);
  add_kl(forests_cmd);
  forests_cmd->add_flag("--rectified", o.rectified, "Rectified forests only");

  auto* rectify_cmd = app.add_subcommand("rectify", "Rectify a forest in the tree module");
  add_rn(rectify_cmd);
  rectify_cmd->add_option("--forest", o.forest, "e.g. \"2->1;3->1*\"")->required();

  auto* reduce_cmd = app.add_subcommand("os-reduce", "alpha(F) in the rectified basis");
  add_rn(reduce_cmd);
  reduce_cmd->add_option("--forest", o.forest, "e.g. \"2->1[e1]\"")->required();

  auto* dims_cmd = app.add_subcommand("dims", "Graded dimensions of A(T(r, n)) or its isotypic part");
  add_rn(dims_cmd);
  add_weights(dims_cmd, false);

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the local system");
  add_rn(betti_cmd);
  add_weights(betti_cmd, true);

  auto* form_cmd = app.add_subcommand("form", "The form beta-bar(F)");
  add_rn(form_cmd);
  add_weights(form_cmd, true);
  form_cmd->add_option("--forest", o.forest, "e.g. \"1->2;2->3;3->4*\"")->required();

  auto* gen_cmd = app.add_subcommand("generators", "Module generators for the weights");
  add_rn(gen_cmd);
  add_weights(gen_cmd, true);

  auto* res_cmd = app.add_subcommand("resonant", "Resonance test");
  add_rn(res_cmd);
  add_weights(res_cmd, true);
  res_cmd->add_option("--pairs", o.pairs, "Pair weights, e.g. \"1,2=1/2;2,3=1\"");

  auto* char_cmd = app.add_subcommand("character", "Characters of A^{k,l}, V(r, n) or isotypic parts");
  add_rn(char_cmd);
  add_kl(char_cmd);
  add_weights(char_cmd, false);
  char_cmd->add_flag("--module", o.module, "Character of V(r, n)");

  auto* verify_cmd = app.add_subcommand("verify", "Run an acceptance check or corollary");
  std::vector<std::string> names;
  for (const auto& c : acceptance_checks()) names.emplace_back(c.name);
  for (const auto& [name, which] : corollary_cases()) names.push_back(name);
  verify_cmd->add_option("case", o.check, "Check name")->required()->check(CLI::IsMember(names));
  add_rn(verify_cmd);
  add_kl(verify_cmd);
  verify_cmd->add_option("--s", o.s, "Numerator of the weight s/r");
  verify_cmd->add_option("--m", o.m, "m for mysterythm")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kParseError;
  }

  CLI::App* sub = app.get_subcommands().front();
  auto given = [sub](const char* name) {
    auto* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  bool r_given = given("--r");
  try {
    Document doc;
    bool passed = true;
    std::string name = sub->get_name();
    if (name == "trees") doc = trees(o);
    else if (name == "forests") doc = forests(o);
    else if (name == "rectify") doc = rectify(o);
    else if (name == "os-reduce") doc = os_reduce(o);
    else if (name == "dims") doc = dims(o, r_given);
    else if (name == "betti") doc = betti(o, r_given);
    else if (name == "form") doc = form(o, r_given);
    else if (name == "generators") doc = generators(o);
    else if (name == "resonant") doc = resonant(o);
    else if (name == "character") doc = character(o);
    else doc = verify(o, &passed);
    emit(doc, o.format, out);
    return passed ? kOk : kVerificationFailed;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DivisionByZero& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::domain_error& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  }
}

}  // namespace osforest::cli
