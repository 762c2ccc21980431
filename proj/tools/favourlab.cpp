// favourlab: command-line front end for the favouring laboratory.
//
// Exit status: 0 when the command ran (whatever the verdict), 1 on an input
// or file error, 2 on a usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "favourlab/construction.hpp"
#include "favourlab/default_logic.hpp"
#include "favourlab/error.hpp"
#include "favourlab/paradox.hpp"
#include "favourlab/world.hpp"
#include "report.hpp"

namespace fl = favourlab;
using fl::cli::exact;
using fl::cli::Json;

namespace {

struct Options {
  bool json = false;
  std::string world, cells, theory;
  std::string hypothesis, evidence;
  std::string a = "a", b = "b", c = "c";
  std::string v1, v2;
  std::size_t extra = 0;
  bool extra_given = false;
  std::uint32_t max_cell = 4;
  std::size_t limit = 10;
  std::string pattern = "simpson";
  std::string mode = "skeptical";
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fl::InvalidInput("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw fl::InvalidInput("cannot write '" + path + "'");
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {}

  fl::World world() {
    if (!o_.world.empty() && !o_.cells.empty()) throw fl::InvalidInput("give either --world or --cells, not both");
    if (!o_.cells.empty()) {
      report_["inputs"]["cells"] = o_.cells;
      return fl::CellTable::parse(o_.cells).to_world();
    }
    if (o_.world.empty()) throw fl::InvalidInput("--world or --cells is required");
    report_["inputs"]["world"] = o_.world;
    return fl::parse_world(read_file(o_.world));
  }

  fl::DefaultTheory theory() {
    if (o_.theory.empty()) throw fl::InvalidInput("--theory is required");
    report_["inputs"]["theory"] = o_.theory;
    return fl::parse_theory(read_file(o_.theory));
  }

  fl::Formula formula(const std::string& role, const std::string& text, const fl::Universe& universe) {
    if (text.empty()) throw fl::InvalidInput("missing formula for " + role);
    report_["inputs"][role] = text;
    try {
      return fl::parse_formula(text, universe);
    } catch (const fl::Error& e) {
      throw fl::InvalidInput(role + " '" + text + "': " + e.what());
    }
  }

  fl::Rational rational(const std::string& flag, const std::string& text) {
    if (text.empty()) throw fl::InvalidInput(flag + " is required");
    try {
      fl::Rational r = fl::Rational::parse(text);
      report_["inputs"][flag.substr(2)] = r.to_string();
      return r;
    } catch (const fl::SyntaxError& e) {
      throw fl::InvalidInput(flag + " '" + text + "' is not an exact rational: " + e.what());
    }
  }

  struct Triple {
    fl::World world;
    fl::Formula a, b, c;
  };
  Triple triple() {
    fl::World w = world();
    auto a = formula("a", o_.a, w.universe());
    auto b = formula("b", o_.b, w.universe());
    auto c = formula("c", o_.c, w.universe());
    return {std::move(w), a, b, c};
  }

  Json& report() { return report_; }
  const Options& options() const { return o_; }

  void start(const std::string& command) {
    report_ = Json::object();
    report_["command"] = command;
    report_["inputs"] = Json::object();
  }

  void emit() const {
    if (o_.json) std::cout << report_.dump(2) << "\n";
    else std::cout << fl::cli::render_text(report_);
  }

 private:
  const Options& o_;
  Json report_;
};

Json comparison(const fl::Comparison& c, const char* relation) {
  return Json{{"left", exact(c.left)}, {"relation", relation}, {"right", exact(c.right)}, {"holds", c.holds}};
}

Json cells_json(const fl::CellTable& t) {
  Json counts = Json::array();
  for (auto n : t.counts) counts.push_back(n);
  return Json{{"text", t.to_string()}, {"counts", counts}};
}

Json extension_json(const fl::Extension& e, const fl::DefaultTheory& t) {
  Json rules = Json::array();
  for (std::size_t r : e.generating()) rules.push_back(t.rules[r].to_string());
  Json consequents = Json::array();
  for (std::size_t r : e.generating()) consequents.push_back(t.rules[r].consequent.to_string());
  return Json{{"generating", rules}, {"consequents", consequents}};
}

// ---------------------------------------------------------------------------

void cmd_eval(Session& s) {
  s.start("eval");
  fl::World w = s.world();
  fl::Formula h = s.formula("hypothesis", s.options().hypothesis, w.universe());
  if (s.options().evidence.empty()) {
    s.report()["probability"] = exact(w.probability(h));
    return;
  }
  fl::Formula e = s.formula("evidence", s.options().evidence, w.universe());
  s.report()["conditional"] = exact(w.try_conditional(h, e));
  s.report()["evidence_probability"] = exact(w.probability(e));
}

void cmd_favours(Session& s) {
  s.start("favours");
  fl::World w = s.world();
  fl::Formula h = s.formula("hypothesis", s.options().hypothesis, w.universe());
  fl::Formula e = s.formula("evidence", s.options().evidence, w.universe());
  s.report()["result"] = fl::cli::verdict(fl::favours(w, h, e));
}

void cmd_simpson(Session& s) {
  s.start("simpson");
  auto [w, a, b, c] = s.triple();
  auto r = fl::simpson_check(w, a, b, c);
  s.report()["paradox"] = r.paradox;
  s.report()["within_c"] = comparison(r.within_c, ">");
  s.report()["within_not_c"] = comparison(r.within_not_c, ">");
  s.report()["marginal"] = comparison(r.marginal, "<");
}

void cmd_chung(Session& s) {
  s.start("chung");
  auto [w, a, b, c] = s.triple();
  const auto variant = fl::parse_search_pattern(s.options().pattern);
  if (variant == fl::SearchPattern::simpson) throw fl::InvalidInput("--pattern must be chung-conj or chung-disj");
  s.report()["inputs"]["pattern"] = std::string(fl::to_string(variant));
  auto r = fl::chung_check(w, a, b, c, variant);
  s.report()["applicable"] = r.applicable;
  s.report()["holds"] = r.holds;
  s.report()["prior"] = exact(r.prior);
  s.report()["given_b"] = exact(r.given_b);
  s.report()["given_c"] = exact(r.given_c);
  s.report()[variant == fl::SearchPattern::chung_conjunctive ? "given_b_and_c" : "given_b_or_c"] =
      exact(r.given_combined);
}

void cmd_profile(Session& s) {
  s.start("profile");
  auto [w, a, b, c] = s.triple();
  auto prof = fl::nine_antecedent_profile(w, a, b, c);
  Json conditionals = Json::object();
  for (std::size_t i = 0; i < prof.conditionals.size(); ++i)
    conditionals[std::string(fl::NineAntecedentProfile::kLabels[i])] = exact(prof.conditionals[i]);
  s.report()["conditionals"] = conditionals;
  Json between = Json::array();
  for (const auto& bt : prof.betweenness)
    between.push_back(Json{{"stratum", bt.stratum}, {"refiner", bt.refiner}, {"defined", bt.defined},
                           {"weak", bt.weak}, {"strict", bt.strict}});
  s.report()["betweenness"] = between;
  s.report()["constraint1"] = prof.constraint1;
  s.report()["constraint2"] = prof.constraint2;
  s.report()["constraint3_premise"] = prof.constraint3_premise;
  s.report()["constraint3"] = prof.constraint3;
}

void cmd_principle(Session& s) {
  s.start("principle");
  auto [w, a, b, c] = s.triple();
  auto r = fl::check_disjunction_principle(w, a, b, c);
  s.report()["verdict"] = std::string(fl::to_string(r.verdict));
  s.report()["c_given_a"] = fl::cli::verdict(r.given_a);
  s.report()["c_given_b"] = fl::cli::verdict(r.given_b);
  s.report()["c_given_a_or_b"] = fl::cli::verdict(r.given_disjunction);
}

void cmd_prop1(Session& s) {
  s.start("prop1");
  auto [w, a, b, c] = s.triple();
  auto r = fl::proposition1_check(w, a, b, c);
  s.report()["verdict"] = std::string(fl::to_string(r.verdict));
  s.report()["p_a_and_b"] = exact(r.overlap);
  if (r.a_given_c) s.report()["a_given_c"] = fl::cli::verdict(*r.a_given_c);
  if (r.b_given_c) s.report()["b_given_c"] = fl::cli::verdict(*r.b_given_c);
  if (r.disjunction_given_c) s.report()["a_or_b_given_c"] = fl::cli::verdict(*r.disjunction_given_c);
}

void cmd_prop2(Session& s) {
  s.start("prop2");
  auto [w, a, b, c] = s.triple();
  auto r = fl::proposition2_audit(w, a, b, c);
  s.report()["verdict"] = std::string(fl::to_string(r.verdict));
  s.report()["a_given_b"] = fl::cli::verdict(r.given_b);
  s.report()["a_given_c"] = fl::cli::verdict(r.given_c);
  s.report()["a_given_b_and_c"] = fl::cli::verdict(r.given_conjunction);
  s.report()["a_given_b_or_c"] = fl::cli::verdict(r.given_disjunction);
}

void finish_world(Session& s, const fl::World& w, const std::vector<std::string>& comments) {
  const std::string text = fl::format_world(w, comments);
  s.report()["outcomes"] = w.outcomes().size();
  s.report()["atoms"] = w.universe().size();
  if (!s.options().out.empty()) {
    write_file(s.options().out, text);
    s.report()["written"] = s.options().out;
  } else {
    s.report()["world"] = text;
  }
}

void cmd_construct_two_class(Session& s) {
  s.start("construct two-class");
  const std::size_t extra = s.options().extra_given ? s.options().extra : 1;
  s.report()["inputs"]["extra"] = extra;
  fl::World w = fl::build_two_class_world(extra);
  finish_world(s, w, {"two-class world, extra_science = " + std::to_string(extra)});
}

void cmd_construct_general(Session& s) {
  s.start("construct general");
  fl::ConstructionSpec spec{s.rational("--v1", s.options().v1), s.rational("--v2", s.options().v2),
                            s.options().extra_given ? s.options().extra : 0};
  s.report()["inputs"]["extra"] = spec.extra_science;
  auto built = fl::build_disjunctive_world(spec);
  s.report()["k"] = built.k;
  s.report()["n"] = built.n;
  const auto k = static_cast<std::int64_t>(built.k), n = static_cast<std::int64_t>(built.n);
  s.report()["p_s_given_class"] = exact(fl::Rational(k) / fl::Rational(k + 1));
  s.report()["p_s_given_any_class"] = exact(fl::Rational(k) / fl::Rational(k + n));
  finish_world(s, built.world, fl::describe(built, spec));
}

void cmd_construct_conjunctive(Session& s) {
  s.start("construct conjunctive");
  const fl::Rational v1 = s.rational("--v1", s.options().v1), v2 = s.rational("--v2", s.options().v2);
  fl::World w = fl::build_conjunctive_world(v1, v2);
  const auto a = fl::Formula::atom("a"), b = fl::Formula::atom("b"), c = fl::Formula::atom("c");
  s.report()["p_c_given_a"] = exact(w.conditional(c, a));
  s.report()["p_c_given_b"] = exact(w.conditional(c, b));
  s.report()["p_c_given_a_and_b"] = exact(w.conditional(c, a && b));
  finish_world(s, w, {"conjunctive construction, v1 = " + v1.to_string() + ", v2 = " + v2.to_string()});
}

void cmd_search(Session& s) {
  s.start("search");
  const auto pattern = fl::parse_search_pattern(s.options().pattern);
  s.report()["inputs"]["pattern"] = std::string(fl::to_string(pattern));
  s.report()["inputs"]["max_cell"] = s.options().max_cell;
  s.report()["inputs"]["limit"] = s.options().limit;
  auto hits = fl::search_counterexamples(pattern, s.options().max_cell, s.options().limit);
  s.report()["found"] = hits.size();
  Json tables = Json::array();
  for (const auto& t : hits) tables.push_back(cells_json(t));
  s.report()["tables"] = tables;
}

void cmd_extensions(Session& s) {
  s.start("extensions");
  fl::DefaultTheory t = s.theory();
  auto set = fl::compute_extensions(t);
  s.report()["facts_inconsistent"] = set.facts_inconsistent;
  s.report()["count"] = set.extensions.size();
  Json list = Json::array();
  for (const auto& e : set.extensions) {
    Json item = extension_json(e, t);
    Json atoms = Json::object();
    for (const auto& a : t.universe.names()) {
      const auto f = fl::Formula::atom(a);
      atoms[a] = e.entails(f) ? "true" : e.entails(!f) ? "false" : "unknown";
    }
    item["atoms"] = atoms;
    list.push_back(item);
  }
  s.report()["extensions"] = list;
}

void cmd_query(Session& s) {
  s.start("query");
  fl::DefaultTheory t = s.theory();
  fl::Formula f = s.formula("hypothesis", s.options().hypothesis, t.universe);
  const auto mode = fl::parse_query_mode(s.options().mode);
  s.report()["inputs"]["mode"] = s.options().mode;
  auto set = fl::compute_extensions(t);
  if (set.facts_inconsistent) throw fl::InvalidInput("theory facts are inconsistent");
  Json per = Json::array();
  for (const auto& e : set.extensions) per.push_back(e.entails(f));
  s.report()["extensions"] = set.extensions.size();
  s.report()["entailed_by"] = per;
  s.report()["result"] = fl::query(t, f, mode);
}

void cmd_to_consequent(Session& s) {
  s.start("to-consequent");
  fl::DefaultTheory t = fl::to_consequent_form(s.theory());
  Json rules = Json::array();
  for (const auto& r : t.rules) rules.push_back(r.to_string());
  s.report()["rules"] = rules;
  const std::string text = fl::format_theory(t);
  if (!s.options().out.empty()) {
    write_file(s.options().out, text);
    s.report()["written"] = s.options().out;
  } else {
    s.report()["theory"] = text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Probabilistic favouring, paradox search and default logic"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON report");
  app.fallthrough();

  auto world_opts = [&](CLI::App* sub) {
    sub->add_option("--world", o.world, "World file");
    sub->add_option("--cells", o.cells, "Cell table 'cells a b c : n1 .. n8' instead of a world file");
  };
  auto triple_opts = [&](CLI::App* sub) {
    world_opts(sub);
    sub->add_option("-a", o.a, "Formula a (default: a)");
    sub->add_option("-b", o.b, "Formula b (default: b)");
    sub->add_option("-c", o.c, "Formula c (default: c)");
  };

  Session session(o);
  using Handler = void (*)(Session&);
  Handler handler = nullptr;
  auto bind = [&handler](CLI::App* sub, Handler h) { sub->callback([&handler, h] { handler = h; }); };

  auto* eval = app.add_subcommand("eval", "Probability p(h) or conditional p(h|e) on a world");
  world_opts(eval);
  eval->add_option("-h,--hypothesis", o.hypothesis)->required();
  eval->add_option("-e,--evidence", o.evidence);
  bind(eval, cmd_eval);

  auto* fav = app.add_subcommand("favours", "Does the evidence favour the hypothesis: p(h|e) vs p(h)");
  world_opts(fav);
  fav->add_option("-h,--hypothesis", o.hypothesis)->required();
  fav->add_option("-e,--evidence", o.evidence)->required();
  bind(fav, cmd_favours);

  auto* simpson = app.add_subcommand("simpson", "Check the three Simpson inequalities");
  triple_opts(simpson);
  bind(simpson, cmd_simpson);

  auto* chung = app.add_subcommand("chung", "Check a Chung configuration");
  triple_opts(chung);
  chung->add_option("--pattern", o.pattern, "chung-conj or chung-disj")->required();
  bind(chung, cmd_chung);

  auto* profile = app.add_subcommand("profile", "Nine-antecedent conditional profile and its constraints");
  triple_opts(profile);
  bind(profile, cmd_profile);

  auto* principle = app.add_subcommand("principle", "Test proof by cases: a, b favour c; does a|b?");
  triple_opts(principle);
  bind(principle, cmd_principle);

  auto* prop1 = app.add_subcommand("prop1", "Exclusive a, b favoured by c: is a|b favoured by c?");
  triple_opts(prop1);
  bind(prop1, cmd_prop1);

  auto* prop2 = app.add_subcommand("prop2", "b, c favour a: which of b&c, b|c does");
  triple_opts(prop2);
  bind(prop2, cmd_prop2);

  auto* construct = app.add_subcommand("construct", "Build a counterexample world");
  construct->require_subcommand(1);
  auto* two = construct->add_subcommand("two-class", "Two classes of arts and science students");
  two->add_option("--extra", o.extra, "Science students in neither class (default 1)");
  two->add_option("--out", o.out, "Write the world file here");
  bind(two, cmd_construct_two_class);
  auto* general = construct->add_subcommand("general", "n classes of k science and one arts student each");
  general->add_option("--v1", o.v1, "Lower bound for p(s|c_i), as n/d")->required();
  general->add_option("--v2", o.v2, "Upper bound for p(s|c_1|...|c_n), as n/d")->required();
  general->add_option("--extra", o.extra, "Science students in no class (default 0)");
  general->add_option("--out", o.out, "Write the world file here");
  bind(general, cmd_construct_general);
  auto* conj = construct->add_subcommand("conjunctive", "p(c|a) = p(c|b) = v1, p(c|a&b) = v2");
  conj->add_option("--v1", o.v1)->required();
  conj->add_option("--v2", o.v2)->required();
  conj->add_option("--out", o.out, "Write the world file here");
  bind(conj, cmd_construct_conjunctive);

  auto* search = app.add_subcommand("search", "Exhaustive cell-table search for paradox instances");
  search->add_option("--pattern", o.pattern, "simpson, chung-conj or chung-disj");
  search->add_option("--max-cell", o.max_cell, "Largest count per cell (default 4)");
  search->add_option("--limit", o.limit, "Stop after this many tables (default 10)");
  bind(search, cmd_search);

  auto* ext = app.add_subcommand("extensions", "Reiter extensions of a normal default theory");
  ext->add_option("--theory", o.theory)->required();
  bind(ext, cmd_extensions);

  auto* query = app.add_subcommand("query", "Skeptical or credulous query against a theory");
  query->add_option("--theory", o.theory)->required();
  query->add_option("-h,--hypothesis", o.hypothesis)->required();
  query->add_option("--mode", o.mode, "skeptical (default) or credulous");
  bind(query, cmd_query);

  auto* tc = app.add_subcommand("to-consequent", "Rewrite prerequisite-form defaults in consequent form");
  tc->add_option("--theory", o.theory)->required();
  tc->add_option("--out", o.out, "Write the theory file here");
  bind(tc, cmd_to_consequent);

  for (CLI::App* sub : {two, general}) sub->get_option("--extra")->each([&o](const std::string&) { o.extra_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    handler(session);
    session.emit();
  } catch (const fl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
