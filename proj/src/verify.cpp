#include "fakedeg/verify.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "fakedeg/bijections.hpp"
#include "fakedeg/dominoes.hpp"
#include "fakedeg/fakedeg.hpp"
#include "fakedeg/shapes.hpp"
#include "fakedeg/tableaux.hpp"

namespace fakedeg {

using nlohmann::json;

json poly_to_json(const QPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}, {"pretty", to_string(p)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1", "thm2", "thm4", "thm5", "bijections", "poincare", "cor1", "all"};
  return names;
}

namespace {

void add_route_record(VerifyReport& report, const std::string& group, const std::string& label,
                      const std::vector<std::pair<std::string, QPolynomial>>& routes) {
  json r = json::object();
  bool agree = true;
  for (const auto& [name, poly] : routes) {
    r[name] = poly_to_json(poly);
    agree = agree && poly == routes.front().second;
  }
  const QPolynomial& f = routes.front().second;
  const bool palindromic = f.is_palindromic();
  report.records.push_back({{"group", group},
                            {"label", label},
                            {"routes", r},
                            {"agree", agree},
                            {"exponents", exponent_multiset(f)},
                            {"palindromic", palindromic}});
  if (!agree) ++report.failures;
  if (!palindromic) ++report.notes;
}

void suite_thm1(VerifyReport& report, int max_n) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= max_n; ++n)
      for (const auto& m : multipartitions_of(n, d))
        add_route_record(report, to_string(Group::wreath(d, n)), format_multipartition(m),
                         {{"formula", fake_degree_wreath(m, d, WreathRoute::formula)},
                          {"enumeration", fake_degree_wreath(m, d, WreathRoute::enumeration)}});
}

void suite_thm2(VerifyReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& pair : multipartitions_of(n, 2))
      add_route_record(report, to_string(Group::typeBC(n)), format_multipartition(pair),
                       {{"tuple", fake_degree_BC(pair, BCRoute::tuple)},
                        {"domino_even", fake_degree_BC(pair, BCRoute::domino_even)},
                        {"domino_odd", fake_degree_BC(pair, BCRoute::domino_odd)}});
}

void suite_typeD(VerifyReport& report, int max_n, DRoute other, const char* other_name) {
  for (int n = 2; n <= max_n; ++n)
    for (const auto& rep : typeD_representations(n))
      add_route_record(report, to_string(Group::typeD(n)), rep.label(),
                       {{"tuple", fake_degree_D(rep, DRoute::tuple)}, {other_name, fake_degree_D(rep, other)}});
}

json certify_bijection(const Multipartition& pair, DominoType type, int& literal_sweep_failures) {
  const Partition shape = type == DominoType::C ? lusztig_rho1(pair) : lusztig_rho2(pair);
  const auto sdts = enumerate_sdt(shape);
  const auto tuples = enumerate_tuple_tableaux(pair);
  bool shape_correct = true;
  bool maj_preserved = true;
  bool contract = true;
  int literal_steps = 0;
  std::set<StandardTupleTableau> images;
  for (const auto& t : sdts) {
    const InsertionResult ins = insert_dominoes(t, type);
    for (const auto& s : ins.steps)
      if (!s.literal_agrees) ++literal_steps;
    const int md = maj_domino(t);
    if (ins.pair.shape() != pair) shape_correct = false;
    if (pair_maj(ins.pair, type) != md) contract = false;
    const TableauPair z = flip(ins.pair, type).pair;
    if (maj_tuple(z) != md) maj_preserved = false;
    if (maj_tuple(flip_sweeps_literal(ins.pair, type).pair) != md) ++literal_sweep_failures;
    images.insert(z);
  }
  const bool injective = images.size() == sdts.size();
  const bool surjective = injective && sdts.size() == tuples.size();
  const int n = pair.total_size();
  return {{"group", (type == DominoType::C ? "typeC(" : "typeB(") + std::to_string(n) + ")"},
          {"label", format_multipartition(pair)},
          {"shape", format_partition(shape)},
          {"sdt_count", sdts.size()},
          {"tuple_count", tuples.size()},
          {"shape_correct", shape_correct},
          {"pair_maj_contract", contract},
          {"maj_preserved", maj_preserved},
          {"injective", injective},
          {"surjective", surjective},
          {"literal_rule_mismatches", literal_steps},
          {"agree", shape_correct && contract && maj_preserved && injective && surjective}};
}

void suite_bijections(VerifyReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& pair : multipartitions_of(n, 2))
      for (DominoType type : {DominoType::C, DominoType::B}) {
        int literal_sweep_failures = 0;
        json r = certify_bijection(pair, type, literal_sweep_failures);
        r["literal_sweep_maj_failures"] = literal_sweep_failures;
        if (!r["agree"].get<bool>()) ++report.failures;
        if (literal_sweep_failures > 0) ++report.notes;
        report.records.push_back(std::move(r));
      }
}

void suite_poincare(VerifyReport& report, int max_n) {
  std::vector<Group> groups;
  for (int n = 0; n <= max_n; ++n) groups.push_back(Group::wreath(2, n));
  for (int n = 0; n <= max_n; ++n) groups.push_back(Group::wreath(3, n));
  for (int n = 2; n <= max_n; ++n) groups.push_back(Group::typeD(n));
  for (const auto& g : groups) {
    const QPolynomial sum = regular_representation_sum(g);
    const QPolynomial p = poincare_polynomial(g);
    report.records.push_back({{"group", to_string(g)},
                              {"label", "regular"},
                              {"routes", {{"sum_dim_f", poly_to_json(sum)}, {"poincare", poly_to_json(p)}}},
                              {"agree", sum == p}});
    if (sum != p) ++report.failures;
  }
}

void add_cor1(VerifyReport& report, const std::string& group, const std::vector<Corollary1Entry>& entries) {
  for (const auto& e : entries) {
    report.records.push_back({{"group", group},
                              {"label", e.label},
                              {"partner", e.partner},
                              {"exponents", e.exponents},
                              {"partner_exponents", e.partner_exponents},
                              {"shifts", e.shifts},
                              {"agree", e.ok}});
    if (!e.ok) ++report.failures;
  }
}

void suite_cor1(VerifyReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) add_cor1(report, to_string(Group::typeBC(n)), check_corollary1_BC(n));
  for (int n = 2; n <= max_n; ++n) add_cor1(report, to_string(Group::typeD(n)), check_corollary1_D(n));
}

}  // namespace

VerifyReport run_suite(std::string_view suite, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max-n must be nonnegative");
  const std::map<std::string, std::function<void(VerifyReport&)>, std::less<>> suites{
      {"thm1", [&](VerifyReport& r) { suite_thm1(r, max_n); }},
      {"thm2", [&](VerifyReport& r) { suite_thm2(r, max_n); }},
      {"thm4", [&](VerifyReport& r) { suite_typeD(r, max_n, DRoute::shifted, "shifted"); }},
      {"thm5", [&](VerifyReport& r) { suite_typeD(r, max_n, DRoute::domino, "domino"); }},
      {"bijections", [&](VerifyReport& r) { suite_bijections(r, max_n); }},
      {"poincare", [&](VerifyReport& r) { suite_poincare(r, max_n); }},
      {"cor1", [&](VerifyReport& r) { suite_cor1(r, max_n); }},
  };
  VerifyReport report;
  if (suite == "all") {
    for (const auto& name : suite_names())
      if (name != "all") {
        const std::size_t start = report.records.size();
        suites.find(name)->second(report);
        for (std::size_t i = start; i < report.records.size(); ++i) report.records[i]["suite"] = name;
      }
    return report;
  }
  const auto it = suites.find(suite);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  it->second(report);
  for (auto& r : report.records) r["suite"] = std::string(suite);
  return report;
}

}  // namespace fakedeg
