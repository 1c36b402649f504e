#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fakedeg/bijections.hpp"
#include "fakedeg/dominoes.hpp"
#include "fakedeg/fakedeg.hpp"
#include "fakedeg/shapes.hpp"
#include "fakedeg/tableaux.hpp"
#include "fakedeg/verify.hpp"

namespace fakedeg::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeOptions {
  std::string group;
  std::optional<int> d;
  std::optional<std::string> pair;
  std::optional<std::string> multi;
  std::string route;
  std::string format = "text";
  int c = 1;
};

struct EnumerateOptions {
  std::string kind;
  std::string shape;
  bool with_maj = false;
};

struct ExplainOptions {
  std::string shape;
  int index = 1;
};

struct VerifyOptions {
  std::string suite;
  int max_n = 4;
  std::optional<std::string> out;
};

struct PoincareOptions {
  std::string group;
  int n = 0;
  int d = 2;
};

const std::map<std::string, std::vector<std::string>>& routes_by_group() {
  static const std::map<std::string, std::vector<std::string>> routes{
      {"wreath", {"formula", "enumeration"}},
      {"bc", {"tuple", "domino_even", "domino_odd"}},
      {"d", {"tuple", "domino", "shifted"}},
  };
  return routes;
}

QPolynomial compute_route(const std::string& group, const std::string& route, const Multipartition& label, int d,
                          int c) {
  if (group == "wreath")
    return fake_degree_wreath(label, d, route == "formula" ? WreathRoute::formula : WreathRoute::enumeration);
  if (group == "bc") {
    const BCRoute r = route == "tuple" ? BCRoute::tuple : route == "domino_even" ? BCRoute::domino_even : BCRoute::domino_odd;
    return fake_degree_BC(label, r);
  }
  const DRoute r = route == "tuple" ? DRoute::tuple : route == "domino" ? DRoute::domino : DRoute::shifted;
  return fake_degree_D(TypeDRep(label, c), r);
}

int cmd_compute(const ComputeOptions& o, std::ostream& out) {
  const auto& table = routes_by_group();
  const auto group_it = table.find(o.group);
  if (group_it == table.end()) throw UsageError("unknown group '" + o.group + "' (wreath, bc, d)");
  if (o.pair && o.multi) throw UsageError("give either --pair or --multi, not both");
  if (!o.pair && !o.multi) throw UsageError("a label is required: --pair or --multi");
  if (o.group != "wreath" && o.multi) throw UsageError("group " + o.group + " takes --pair");

  Multipartition label = o.pair ? parse_pair(*o.pair) : parse_multipartition(*o.multi);
  int d = 2;
  if (o.group == "wreath") {
    d = o.d.value_or(label.d());
    if (d != label.d())
      throw UsageError("--d " + std::to_string(d) + " does not match " + std::to_string(label.d()) + " components");
  } else if (o.d && *o.d != 2) {
    throw UsageError("group " + o.group + " has d = 2");
  }
  if (o.group == "d") {
    if (label.total_size() < 2) throw UsageError("type D needs rank n >= 2");
    if (o.c == 2 && label[0] != label[1]) throw UsageError("--c 2 needs equal partitions");
    label = TypeDRep(label, o.c).pair();
  } else if (o.c != 1) {
    throw UsageError("--c only applies to group d");
  }

  std::vector<std::string> routes;
  const auto& valid = group_it->second;
  if (o.route.empty()) {
    routes = {valid.front()};
  } else if (o.route == "all") {
    routes = valid;
  } else if (std::find(valid.begin(), valid.end(), o.route) != valid.end()) {
    routes = {o.route};
  } else {
    throw UsageError("route '" + o.route + "' is not valid for group " + o.group);
  }

  std::vector<std::pair<std::string, QPolynomial>> results;
  for (const auto& r : routes) results.emplace_back(r, compute_route(o.group, r, label, d, o.c));
  bool agree = true;
  for (const auto& [name, f] : results) agree = agree && f == results.front().second;

  std::string label_text = format_multipartition(label);
  if (o.group == "d" && label[0] == label[1]) label_text += " c=" + std::to_string(o.c);
  if (o.format == "json") {
    json j{{"group", o.group}, {"label", label_text}};
    if (results.size() == 1) {
      j["route"] = results.front().first;
      j.update(poly_to_json(results.front().second));
    } else {
      json r = json::object();
      for (const auto& [name, f] : results) r[name] = poly_to_json(f);
      j["routes"] = r;
      j["agree"] = agree;
    }
    out << j.dump() << '\n';
  } else if (results.size() == 1) {
    out << to_string(results.front().second) << '\n';
  } else {
    for (const auto& [name, f] : results) out << name << ": " << to_string(f) << '\n';
    out << "verdict: " << (agree ? "agree" : "disagree") << '\n';
  }
  return agree ? 0 : 1;
}

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out) {
  std::size_t count = 0;
  auto maj_suffix = [&](int maj) { return o.with_maj ? "  maj=" + std::to_string(maj) : std::string(); };
  if (o.kind == "syt") {
    for (const auto& t : enumerate_syt(parse_partition(o.shape))) {
      out << to_string(t) << maj_suffix(maj_syt(t)) << '\n';
      ++count;
    }
  } else if (o.kind == "tuple") {
    for (const auto& t : enumerate_tuple_tableaux(parse_multipartition(o.shape))) {
      out << to_string(t) << maj_suffix(maj_tuple(t)) << '\n';
      ++count;
    }
  } else if (o.kind == "sdt") {
    for (const auto& t : enumerate_sdt(parse_partition(o.shape))) {
      ++count;
      out << "tableau " << count << maj_suffix(maj_domino(t)) << '\n' << to_string(t);
    }
  } else {
    throw UsageError("unknown kind '" + o.kind + "' (syt, sdt, tuple)");
  }
  out << "count: " << count << '\n';
  return 0;
}

int cmd_map(const std::string& pair_text, std::ostream& out) {
  const Multipartition pair = parse_pair(pair_text);
  out << "rho1 = " << format_partition_paren(lusztig_rho1(pair)) << '\n';
  out << "rho2 = " << format_partition_paren(lusztig_rho2(pair)) << '\n';
  return 0;
}

std::string describe_literal(const InsertionStep& s) {
  return std::string(s.literal_component == 0 ? "Y1 " : "Y2 ") + (s.domino.horizontal() ? "row " : "col ") +
         std::to_string(s.literal_index);
}

int cmd_explain(const ExplainOptions& o, std::ostream& out) {
  const Partition shape = parse_partition(o.shape);
  const auto sdts = enumerate_sdt(shape);
  if (sdts.empty()) throw UsageError("shape " + format_partition_paren(shape) + " has no standard domino tableau");
  if (o.index < 1 || o.index > static_cast<int>(sdts.size()))
    throw UsageError("index " + std::to_string(o.index) + " out of range 1.." + std::to_string(sdts.size()));
  const DominoTableau& t = sdts[static_cast<std::size_t>(o.index - 1)];
  const DominoType type = shape.size() % 2 == 0 ? DominoType::C : DominoType::B;
  const char* type_name = type == DominoType::C ? "C" : "B";

  out << "shape " << format_partition_paren(shape) << ", tableau " << o.index << " of " << sdts.size() << ", type "
      << type_name << '\n';
  out << to_string(t);
  const int md = maj_domino(t);
  out << "maj(T) = " << md << '\n';

  const InsertionResult ins = insert_dominoes(t, type);
  out << "insertion:\n";
  for (const auto& s : ins.steps) {
    out << "  " << s.label << ": " << s.rule << " -> " << (s.placed.component == 0 ? "Y1" : "Y2") << " ("
        << s.placed.cell.row << "," << s.placed.cell.col << ")  literal " << describe_literal(s) << ": "
        << (s.literal_agrees ? "agrees" : "differs") << '\n';
  }
  out << "(Y1,Y2) = " << to_string(ins.pair) << '\n';
  out << "pair maj = " << pair_maj(ins.pair, type) << '\n';

  const FlipResult flipped = flip(ins.pair, type);
  out << "swaps:";
  if (flipped.swaps.empty()) out << " none";
  for (int i : flipped.swaps) out << ' ' << i << '-' << i + 1;
  out << '\n';
  out << "(Z1,Z2) = " << to_string(flipped.pair) << '\n';
  const int mz = maj_tuple(flipped.pair);
  out << "maj(Z) = " << mz << '\n';
  out << "maj preserved: " << (mz == md ? "true" : "false") << '\n';
  return mz == md ? 0 : 1;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UsageError("unknown suite '" + o.suite + "'");
  if (o.max_n < 0) throw UsageError("--max-n must be nonnegative");
  const VerifyReport report = run_suite(o.suite, o.max_n);

  std::ofstream file;
  std::ostream* sink = &out;
  if (o.out) {
    file.open(*o.out);
    if (!file) throw UsageError("cannot write " + *o.out);
    sink = &file;
  }
  for (const auto& r : report.records) *sink << r.dump() << '\n';
  err << "suite " << o.suite << ": " << report.records.size() << " records, " << report.failures << " failures, "
      << report.notes << " notes\n";
  return report.failures == 0 ? 0 : 1;
}

int cmd_poincare(const PoincareOptions& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("--n must be nonnegative");
  Group g;
  if (o.group == "wreath") {
    if (o.d < 1) throw UsageError("--d must be positive");
    g = Group::wreath(o.d, o.n);
  } else if (o.group == "bc") {
    g = Group::typeBC(o.n);
  } else if (o.group == "d") {
    if (o.n < 2) throw UsageError("type D needs rank n >= 2");
    g = Group::typeD(o.n);
  } else {
    throw UsageError("unknown group '" + o.group + "' (wreath, bc, d)");
  }
  out << to_string(poincare_polynomial(g)) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fake degrees of classical Weyl groups and wreath products"};
  app.name("fakedeg");
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Fake degree of one irreducible");
  c->add_option("--group", compute.group, "wreath, bc or d")->required();
  c->add_option("--d", compute.d, "Number of components (wreath)");
  c->add_option("--pair", compute.pair, "Partition pair \"p1|p2\"");
  c->add_option("--multi", compute.multi, "Multipartition \"p1|...|pd\"");
  c->add_option("--route", compute.route, "Route name or \"all\"");
  c->add_option("--format", compute.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c->add_option("--c", compute.c, "Type D marker for equal pairs")->check(CLI::IsMember({1, 2}));

  EnumerateOptions enumerate;
  auto* e = app.add_subcommand("enumerate", "List tableaux of a shape");
  e->add_option("--kind", enumerate.kind, "syt, sdt or tuple")->required();
  e->add_option("--shape", enumerate.shape, "Partition, or multipartition for tuple")->required();
  e->add_flag("--with-maj", enumerate.with_maj, "Print major indices");

  std::string map_pair;
  auto* m = app.add_subcommand("map", "Lusztig images of a partition pair");
  m->add_option("--pair", map_pair, "Partition pair \"p1|p2\"")->required();

  ExplainOptions explain;
  auto* x = app.add_subcommand("explain", "Trace the domino-to-pair bijection");
  x->add_option("--shape", explain.shape, "Domino shape")->required();
  x->add_option("--index", explain.index, "1-based tableau index in enumeration order");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run an exhaustive verification suite");
  v->add_option("--suite", verify.suite, "thm1, thm2, thm4, thm5, bijections, poincare, cor1 or all")->required();
  v->add_option("--max-n", verify.max_n, "Largest rank checked");
  v->add_option("--out", verify.out, "Write the JSON-lines report here");

  PoincareOptions poincare;
  auto* p = app.add_subcommand("poincare", "Poincare polynomial of a group");
  p->add_option("--group", poincare.group, "wreath, bc or d")->required();
  p->add_option("--n", poincare.n, "Rank")->required();
  p->add_option("--d", poincare.d, "Cyclic order (wreath)");

  std::vector<std::string> argv_storage{"fakedeg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c) return cmd_compute(compute, out);
    if (*e) return cmd_enumerate(enumerate, out);
    if (*m) return cmd_map(map_pair, out);
    if (*x) return cmd_explain(explain, out);
    if (*v) return cmd_verify(verify, out, err);
    if (*p) return cmd_poincare(poincare, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const InternalError& ex) {
    err << "internal error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace fakedeg::cli
