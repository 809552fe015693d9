#include "liftbraid/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liftbraid/cosets.hpp"
#include "liftbraid/errors.hpp"
#include "liftbraid/hurwitz.hpp"
#include "liftbraid/orbit.hpp"

namespace liftbraid::cli {

namespace {

int as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  const auto x = v.get<long long>();
  if (x < -1'000'000 || x > 1'000'000) throw InvalidInput(std::string(what) + " out of range");
  return static_cast<int>(x);
}

std::vector<int> int_list(const Json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be a list");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, what));
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
}

// Inline JSON when the value starts like a document, otherwise a file path.
std::string load_text(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (value[first] == '{' || value[first] == '[')) return value;
  std::ifstream in(value);
  if (!in) throw InvalidInput("cannot read " + value);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_doc(const std::string& value) { return parse_json(load_text(value)); }

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: " + item);
    }
    if (item.find_first_not_of(' ', used) != std::string::npos)
      throw InvalidInput("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

BasePoint parse_base(const std::string& s) {
  if (s == "start") return BasePoint::start;
  if (s == "end") return BasePoint::end;
  throw InvalidInput("base must be start or end, got " + s);
}

Json word_json(const BraidWord& w) { return w.letters(); }

Json transposition_json(const Transposition& t) { return Json::array({t.a(), t.b()}); }

Json signature_json(const ComponentSignature& sig) {
  Json out = Json::array();
  for (const auto& b : sig.blocks)
    out.push_back(Json{{"sheets", b.sheets}, {"branches", b.branch_count}});
  return out;
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string("missing ") + flag);
  return *v;
}

class Command {
 public:
  Command(const Arguments& args, Json& inputs) : args_(args), inputs_(inputs) {}

  MonodromySequence covering(std::size_t k = 0) const {
    if (args_.coverings.size() <= k) throw InvalidInput("missing --covering");
    MonodromySequence s = parse_covering(load_text(args_.coverings[k]));
    if (k == 0)
      inputs_["covering"] = covering_json(s);
    else
      inputs_["other"] = covering_json(s);
    return s;
  }

  BraidWord braid(int strands) const {
    BraidWord w = parse_braid(need(args_.braid, "--braid"), strands);
    inputs_["braid"] = word_json(w);
    return w;
  }

  int n() const {
    const int v = need(args_.n, "--n");
    if (v < 1) throw InvalidInput("--n must be positive");
    inputs_["n"] = v;
    return v;
  }

  std::size_t cap(std::size_t fallback) const {
    if (args_.cap) {
      if (*args_.cap == 0) throw InvalidInput("--cap must be positive");
      inputs_["cap"] = *args_.cap;
      return *args_.cap;
    }
    return fallback;
  }

  CurveRef curve(int strands) const {
    CurveRef c = parse_curve(load_doc(need(args_.curve, "--curve")), strands);
    inputs_["curve"] = Json{{"base", c.base}, {"word", word_json(c.word)}};
    return c;
  }

  IntervalRef interval(int strands) const {
    IntervalRef x = parse_interval(load_doc(need(args_.interval, "--interval")), strands);
    inputs_["interval"] = Json{{"base", x.base}, {"word", word_json(x.word)}};
    return x;
  }

  std::vector<CurveRef> system(const std::optional<std::string>& flag, const char* name,
                               int strands) const {
    const Json doc = load_doc(need(flag, name));
    if (!doc.is_array()) throw InvalidInput(std::string(name) + " must be a list of curves");
    std::vector<CurveRef> out;
    Json echo = Json::array();
    for (const auto& c : doc) {
      out.push_back(parse_curve(c, strands));
      echo.push_back(Json{{"base", out.back().base}, {"word", word_json(out.back().word)}});
    }
    inputs_[std::string(name).substr(2)] = echo;
    return out;
  }

  RestrictionSpec restriction() const {
    RestrictionSpec spec;
    if (args_.restriction) {
      spec = parse_restriction(load_doc(*args_.restriction));
    } else {
      spec = RestrictionSpec::make(parse_csv(need(args_.indices, "--indices")),
                                   parse_base(args_.base.value_or("start")));
    }
    inputs_["restriction"] =
        Json{{"indices", spec.indices}, {"base", spec.base == BasePoint::start ? "start" : "end"}};
    return spec;
  }

  const Arguments& args() const { return args_; }
  Json& inputs() const { return inputs_; }

 private:
  const Arguments& args_;
  Json& inputs_;
};

Json run_command(const std::string& name, const Command& c) {
  if (name == "invariants") {
    const auto s = c.covering();
    const auto inv = surface_invariants(s);
    const auto sig = components(s);
    Json surfaces = Json::array();
    for (const auto& comp : inv.components)
      surfaces.push_back(Json{{"sheets", comp.sheets},
                              {"euler", comp.euler},
                              {"boundary", comp.boundary},
                              {"genus", comp.genus}});
    const bool connected = sig.count() == 1;
    return Json{{"degree", s.degree()},
                {"length", s.length()},
                {"chi", inv.euler},
                {"boundary", inv.boundary},
                {"omega", omega_class(s).parts},
                {"components", sig.count()},
                {"connected", connected},
                {"disk", connected && is_disk(s)},
                {"surfaces", surfaces}};
  }
  if (name == "canon") {
    const auto s = c.covering();
    const auto r = canonicalize(s);
    Json moves = Json::array();
    for (const auto& m : r.moves)
      moves.push_back(Json::array(
          {m.position, m.direction == MoveDirection::forward ? "forward" : "inverse"}));
    return Json{{"relabel", r.relabel.images()},
                {"moves", moves},
                {"canonical", covering_json(r.canonical)},
                {"replays", r.replays(s)}};
  }
  if (name == "target") {
    const int d = need(c.args().degree, "--degree");
    const int n = need(c.args().n, "--n");
    const auto parts = parse_csv(c.args().omega.value_or(""));
    if (d < 1 || n < 0) throw InvalidInput("need degree >= 1 and n >= 0");
    const CycleType omega = CycleType::make(d, parts);
    c.inputs()["degree"] = d;
    c.inputs()["n"] = n;
    c.inputs()["omega"] = omega.parts;
    if (!is_realizable(d, n, omega)) return Json{{"realizable", false}};
    return Json{{"realizable", true}, {"target", covering_json(canonical_target(d, n, omega))}};
  }
  if (name == "equivalent") {
    const auto s = c.covering(0);
    const auto t = c.covering(1);
    return Json{{"equivalent", is_equivalent(s, t)}};
  }
  if (name == "act") {
    const auto s = c.covering();
    return Json{{"covering", covering_json(act(s, c.braid(std::max(s.length(), 1))))}};
  }
  if (name == "lift") {
    const auto s = c.covering();
    return Json{{"liftable", is_liftable(s, c.braid(std::max(s.length(), 1)))}};
  }
  if (name == "interval-type") {
    const auto s = c.covering();
    const auto x = c.interval(std::max(s.length(), 1));
    const int type = interval_type(s, x);
    return Json{{"type", type}, {"liftable_power", word_json(interval_power(x, type))}};
  }
  if (name == "tcgens") {
    Json gens = Json::array();
    for (const auto& w : theorem_c_generators(c.n())) gens.push_back(word_json(w));
    return Json{{"generators", gens}};
  }
  if (name == "curve") {
    const auto s = c.covering();
    return Json{
        {"monodromy", transposition_json(curve_monodromy(s, c.curve(std::max(s.length(), 1))))}};
  }
  if (name == "regular") {
    const auto s = c.covering();
    return Json{{"regular", is_regular_curve(s, c.curve(std::max(s.length(), 1)))}};
  }
  if (name == "systems") {
    const auto s = c.covering();
    const int strands = std::max(s.length(), 1);
    const auto a = c.system(c.args().system_a, "--system-a", strands);
    const auto b = c.system(c.args().system_b, "--system-b", strands);
    return Json{{"equivalent", systems_liftable_equivalent(s, a, b)}};
  }
  if (name == "restrict") {
    const auto s = c.covering();
    const auto spec = c.restriction();
    const auto r = restrict(s, spec);
    return Json{{"covering", covering_json(r)},
                {"total", restricted_total_monodromy(s, spec).images()},
                {"signature", signature_json(components(r))}};
  }
  if (name == "orbit") {
    const auto s = c.covering();
    const auto bound = index_bound(s.degree(), s.length());
    const auto table = hurwitz_orbit(s, c.cap(bound));
    return Json{{"index", table.size()}, {"bound", bound}};
  }
  if (name == "schreier") {
    const auto s = c.covering();
    const auto table = hurwitz_orbit(s, c.cap(index_bound(s.degree(), s.length())));
    Json gens = Json::array();
    for (const auto& w : schreier_generators(table)) gens.push_back(word_json(w));
    return Json{{"index", table.size()}, {"generators", gens}};
  }
  if (name == "classify") {
    const int d = need(c.args().degree, "--degree");
    const int n = need(c.args().n, "--n");
    c.inputs()["degree"] = d;
    c.inputs()["n"] = n;
    const auto cls = classify_all(d, n, c.cap(10'000'000));
    Json classes = Json::array();
    for (const auto& k : cls.classes)
      classes.push_back(Json{{"representative", covering_json(k.representative)["monodromy"]},
                             {"count", k.count},
                             {"omega", k.omega.parts},
                             {"connected", k.connected}});
    return Json{{"total", cls.total}, {"connected", cls.connected}, {"classes", classes}};
  }
  if (name == "todd-coxeter") {
    const int n = c.n();
    std::vector<BraidWord> words;
    if (c.args().words) {
      const Json doc = load_doc(*c.args().words);
      if (!doc.is_array()) throw InvalidInput("--words must be a list of words");
      for (const auto& w : doc) words.emplace_back(n, int_list(w, "braid letter"));
    } else {
      words = theorem_c_generators(n);
    }
    Json echo = Json::array();
    for (const auto& w : words) echo.push_back(word_json(w));
    c.inputs()["words"] = echo;
    const std::size_t bound = index_bound(n + 1, n);
    const std::size_t fallback = bound > kNoCap / 64 ? kNoCap : 64 * bound;
    return Json{{"index", todd_coxeter(n, words, c.cap(fallback)).index}};
  }
  if (name == "verify-theorem-c") {
    const int n = c.n();
    const auto r = verify_theorem_c(n, c.cap(0));
    Json tc = r.tc_index ? Json(*r.tc_index) : Json(nullptr);
    return Json{{"n", r.n},
                {"generators", r.generator_count},
                {"liftable", r.generators_liftable},
                {"orbit_index", r.orbit_index},
                {"tc_index", tc},
                {"pass", r.pass}};
  }
  throw std::logic_error("unhandled command " + name);
}

void flatten(const Json& v, const std::string& prefix, std::string& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out += prefix + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
}

}  // namespace

MonodromySequence parse_covering(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("monodromy"))
    throw InvalidInput("covering needs \"degree\" and \"monodromy\"");
  const int d = as_int(doc["degree"], "degree");
  if (d < 1) throw InvalidInput("degree must be positive");
  const Json& m = doc["monodromy"];
  if (!m.is_array()) throw InvalidInput("monodromy must be a list of pairs");
  std::vector<Transposition> entries;
  for (const auto& pair : m) {
    const auto ab = int_list(pair, "sheet");
    if (ab.size() != 2) throw InvalidInput("each monodromy entry must be a pair");
    if (ab[0] < 1 || ab[1] < 1 || ab[0] > d || ab[1] > d)
      throw InvalidInput("sheet out of range 1.." + std::to_string(d));
    if (ab[0] == ab[1]) throw InvalidInput("transposition endpoints must differ");
    entries.emplace_back(ab[0], ab[1]);
  }
  return MonodromySequence(d, std::move(entries));
}

Json covering_json(const MonodromySequence& s) {
  Json pairs = Json::array();
  for (const auto& t : s.entries()) pairs.push_back(transposition_json(t));
  return Json{{"degree", s.degree()}, {"monodromy", pairs}};
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::string s(text);
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not a braid letter: " + tok);
    }
    if (used != tok.size()) throw InvalidInput("not a braid letter: " + tok);
    letters.push_back(v);
  }
  return BraidWord(strands, std::move(letters));
}

CurveRef parse_curve(const Json& doc, int strands) {
  if (!doc.is_object() || !doc.contains("base"))
    throw InvalidInput("curve needs \"base\" and \"word\"");
  CurveRef c{as_int(doc["base"], "base"),
             BraidWord(strands, doc.contains("word") ? int_list(doc["word"], "braid letter")
                                                     : std::vector<int>{})};
  if (c.base < 1 || c.base > strands) throw InvalidInput("curve base out of range");
  return c;
}

IntervalRef parse_interval(const Json& doc, int strands) {
  if (!doc.is_object() || !doc.contains("base"))
    throw InvalidInput("interval needs \"base\" and \"word\"");
  IntervalRef x{as_int(doc["base"], "base"),
                BraidWord(strands, doc.contains("word") ? int_list(doc["word"], "braid letter")
                                                        : std::vector<int>{})};
  if (x.base < 1 || x.base >= strands) throw InvalidInput("interval base out of range");
  return x;
}

RestrictionSpec parse_restriction(const Json& doc) {
  if (!doc.is_object() || !doc.contains("indices"))
    throw InvalidInput("restriction needs \"indices\"");
  BasePoint base = BasePoint::start;
  if (doc.contains("base")) {
    if (!doc["base"].is_string()) throw InvalidInput("base must be \"start\" or \"end\"");
    base = parse_base(doc["base"].get<std::string>());
  }
  return RestrictionSpec::make(int_list(doc["indices"], "index"), base);
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "invariants", "canon",   "target",   "equivalent", "act",      "lift",
      "interval-type", "tcgens", "curve",  "regular",    "systems",  "restrict",
      "orbit",      "schreier", "classify", "todd-coxeter", "verify-theorem-c"};
  return names;
}

Report dispatch(const std::string& command, const Arguments& args) {
  Report r;
  r.command = command;
  try {
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
      throw InvalidInput("unknown command " + command);
    r.result = run_command(command, Command(args, r.inputs));
    r.status = Status::ok;
  } catch (const Inconclusive& e) {
    r.status = Status::inconclusive;
    r.cap = e.cap();
    r.error = e.what();
  } catch (const CapExceeded& e) {
    r.status = Status::inconclusive;
    r.cap = e.cap();
    r.error = e.what();
  } catch (const InvalidInput& e) {
    r.status = Status::invalid_input;
    r.error = e.what();
  } catch (const NotRealizable& e) {
    r.status = Status::invalid_input;
    r.error = e.what();
  } catch (const Json::exception& e) {
    r.status = Status::invalid_input;
    r.error = e.what();
  }
  if (r.status != Status::ok) r.result = nullptr;
  return r;
}

std::string emit(const Report& report, Format format) {
  Json doc;
  doc["command"] = report.command;
  switch (report.status) {
    case Status::ok: doc["status"] = "ok"; break;
    case Status::invalid_input: doc["status"] = "invalid-input"; break;
    case Status::inconclusive: doc["status"] = "inconclusive"; break;
  }
  if (report.cap) doc["cap"] = *report.cap;
  doc["inputs"] = report.inputs;
  if (report.status == Status::ok)
    doc["result"] = report.result;
  else
    doc["error"] = report.error;
  if (format == Format::json) return doc.dump() + "\n";
  std::string out;
  flatten(doc, "", out);
  return out;
}

int exit_code(const Report& report) {
  switch (report.status) {
    case Status::ok: return 0;
    case Status::invalid_input: return 1;
    case Status::inconclusive: return 2;
  }
  return 1;
}

std::string usage() {
  std::string s = "usage: liftbraid COMMAND [options]\n\ncommands:\n";
  for (const auto& c : commands()) s += "  " + c + "\n";
  s +=
      "\noptions:\n"
      "  --covering DOC      covering document (file path or inline JSON); repeat for equivalent\n"
      "  --braid WORD        signed generator letters, e.g. \"2 1 1 -2\"\n"
      "  --n INT             strand / branch count\n"
      "  --degree INT        number of sheets (target, classify)\n"
      "  --omega CSV         cycle type of the total monodromy (target)\n"
      "  --cap INT           enumeration bound (orbit, schreier, classify, todd-coxeter,\n"
      "                      verify-theorem-c)\n"
      "  --indices CSV       restriction indices\n"
      "  --base start|end    restriction base point\n"
      "  --restriction DOC   {\"indices\":[...],\"base\":\"start\"|\"end\"}\n"
      "  --curve DOC         {\"base\":j,\"word\":[...]}\n"
      "  --interval DOC      {\"base\":i,\"word\":[...]}\n"
      "  --system-a DOC      list of curves sharing one word (systems)\n"
      "  --system-b DOC\n"
      "  --words DOC         list of words generating the subgroup (todd-coxeter)\n"
      "  --format json|text  output format (default json)\n"
      "\nexit status: 0 ok, 1 invalid input, 2 inconclusive or cap exceeded\n";
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("liftbraid");
  app.set_help_flag();
  std::string command;
  Arguments args;
  std::string format = "json";
  bool help = false;
  app.add_flag("-h,--help", help);
  app.add_option("command", command);
  app.add_option("--covering", args.coverings)->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--braid", args.braid)->allow_extra_args(false);
  app.add_option("--n", args.n);
  app.add_option("--degree", args.degree);
  app.add_option("--omega", args.omega);
  app.add_option("--cap", args.cap);
  app.add_option("--base", args.base);
  app.add_option("--indices", args.indices);
  app.add_option("--restriction", args.restriction);
  app.add_option("--curve", args.curve);
  app.add_option("--interval", args.interval);
  app.add_option("--system-a", args.system_a);
  app.add_option("--system-b", args.system_b);
  app.add_option("--words", args.words);
  app.add_option("--format", format);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    err << "liftbraid: " << e.what() << "\n" << usage();
    return 1;
  }
  if (help) {
    out << usage();
    return 0;
  }
  if (format != "json" && format != "text") {
    err << "liftbraid: --format must be json or text\n" << usage();
    return 1;
  }
  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    err << (command.empty() ? "liftbraid: missing command\n"
                            : "liftbraid: unknown command " + command + "\n")
        << usage();
    return 1;
  }
  const Report report = dispatch(command, args);
  if (report.status != Status::ok) err << "liftbraid: " << report.error << "\n";
  out << emit(report, format == "json" ? Format::json : Format::text);
  return exit_code(report);
}

}  // namespace liftbraid::cli
