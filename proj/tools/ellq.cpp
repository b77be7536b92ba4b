#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ellq/verify.hpp"

using namespace ellq;
using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  std::string fixtures;
};

int emit(const Options& o, const json& j, const std::string& text)
{
  if (o.json)
    std::cout << j.dump(1) << "\n";
  else
    std::cout << text;
  return 0;
}

std::string pad(std::string s, std::size_t w)
{
  if (s.size() < w) s.resize(w, ' ');
  return s;
}

std::string matrixText(const json& m)
{
  std::size_t w = 1;
  for (const auto& row : m)
    for (const auto& x : row) w = std::max(w, x.get<std::string>().size());
  std::string s;
  for (const auto& row : m) {
    std::string line;
    for (const auto& x : row) line += "  " + pad(x.get<std::string>(), w);
    s += line.substr(0, line.find_last_not_of(' ') + 1) + "\n";
  }
  return s;
}

int cmdGroup(const Options& o, const std::string& type, bool table)
{
  auto w = weylGroup(type);
  json j{{"group", w->name()},
         {"order", w->order()},
         {"rank", w->rank()},
         {"elliptic", w->ellipticClasses()},
         {"classes", classesJson(*w)}};
  if (table) j["table"] = tableJson(*w);
  std::string s = w->name() + ": order " + std::to_string(w->order()) + ", rank " + std::to_string(w->rank()) + ", " +
                  std::to_string(w->numClasses()) + " classes, " + std::to_string(w->ellipticClasses().size()) +
                  " elliptic\n";
  for (const auto& c : w->classes())
    s += "  " + pad(c.name, 12) + " size " + pad(std::to_string(c.size), 6) + (c.elliptic ? " elliptic " : "          ") +
         "det(1-qw) = " + render(RationalFunction(c.charPoly)) + "\n";
  if (table) {
    const auto& l = w->labels();
    for (int i = 0; i < w->numIrreps(); ++i) {
      s += "  " + pad(l[i], 12);
      for (int c = 0; c < w->numClasses(); ++c) s += " " + pad(std::to_string(w->value(i, c)), 4);
      s += "\n";
    }
  }
  return emit(o, j, s);
}

std::vector<int> selectChars(const WeylGroup& w, const std::string& label)
{
  if (!label.empty()) return {w.irrIndex(label)};
  std::vector<int> r(w.numIrreps());
  for (int i = 0; i < w.numIrreps(); ++i) r[i] = i;
  return r;
}

int cmdFake(const Options& o, const std::string& type, const std::string& label)
{
  auto w = weylGroup(type);
  json j = json::array();
  std::string s;
  for (int i : selectChars(*w, label)) {
    QPolynomial f = fakeDegree(*w, w->irreducible(i));
    j.push_back({{"char", w->labels()[i]}, {"fake", toJson(f)}, {"text", f.str()}});
    s += pad(w->labels()[i], 14) + f.str() + "\n";
  }
  return emit(o, j, s);
}

int cmdEfd(const Options& o, const std::string& type, const std::string& label, bool sgn, bool nonzero)
{
  json j = json::array();
  std::string s;
  auto add = [&](const std::string& name, const RationalFunction& f) {
    if (nonzero && f.isZero()) return;
    json e = toJsonFactored(f);
    e["char"] = name;
    j.push_back(e);
    s += pad(name, 14) + render(f) + "\n";
  };
  if (sgn) {
    if (type.size() < 2) throw std::invalid_argument("bad group type: " + type);
    add("sgn", sgnFakeDegree(exponentsOf(char(std::toupper(static_cast<unsigned char>(type[0]))), std::stoi(type.substr(1)))));
  } else {
    auto w = weylGroup(type);
    for (int i : selectChars(*w, label)) add(w->labels()[i], ellipticFakeDegree(*w, w->irreducible(i)));
  }
  return emit(o, j, s);
}

int cmdFourier(const Options& o, const std::string& gamma)
{
  const FourierBlock& b = fourierMatrix(gamma);
  json j = toJson(b);
  std::string s = "M(" + b.gamma + "), " + std::to_string(b.mset.size()) + " pairs\n";
  for (const auto& l : b.labels()) s += "  " + l;
  s += "\n" + matrixText(j["matrix"]);
  return emit(o, j, s);
}

int cmdMx(const Options& o, const std::string& id)
{
  std::vector<UnipotentParam> ps = id.empty() ? unipotentParams() : std::vector<UnipotentParam>{unipotentParam(id)};
  json j = json::array();
  std::string s;
  for (const auto& p : ps) {
    RationalFunction m = mX(p);
    json e = toJsonFactored(m);
    e["id"] = p.id;
    e["dual"] = p.dual;
    j.push_back(e);
    s += pad(p.id, 14) + render(m) + "\n";
  }
  return emit(o, j, s);
}

int cmdVerify(const Options& o, const std::string& suite)
{
  std::vector<std::string> suites = suite == "all" ? verifySuites() : std::vector<std::string>{suite};
  json j = json::array();
  std::string s;
  bool failed = false;
  for (const auto& name : suites) {
    auto reports = runVerify(name);
    failed = failed || anyFailed(reports);
    for (const auto& r : reports) {
      j.push_back(toJson(r));
      s += pad(r.status, 12) + r.checkId + (r.notes.empty() ? "" : "  # " + r.notes) + "\n";
      if (r.status != "PASS") {
        s += "    computed: " + r.computed.dump() + "\n";
        s += "    expected: " + r.expected.dump() + "\n";
      }
    }
  }
  emit(o, j, s);
  return failed ? 1 : 0;
}

int cmdAffine(const Options& o, const std::string& type, bool classes, bool nu, bool ef, bool formal)
{
  if (type != "G2") throw CLI::ValidationError("affine", "only G2 is tabulated");
  if (!classes && !nu && !ef && !formal) classes = nu = ef = formal = true;
  G2AffineReport r = g2AffineReport();
  json j = json::object();
  std::string s;
  if (classes) {
    json c = json::array();
    s += "affine elliptic classes\n";
    for (const auto& x : r.classes) {
      std::string J = r.parabolics[x.parabolic].type;
      c.push_back({{"name", x.name}, {"parabolic", J}, {"order", x.order}, {"size", x.size}, {"mu", x.mu.get_str()}});
      s += "  " + pad(x.name, 4) + " W_J " + pad(J, 6) + " order " + std::to_string(x.order) + "  mu " +
           x.mu.get_str() + "\n";
    }
    j["classes"] = c;
  }
  if (nu) {
    json c = json::array();
    s += "nu\n";
    for (std::size_t i = 0; i < r.nu.size(); ++i) {
      c.push_back(toJsonFactored(r.nu[i]));
      s += "  " + pad(r.classes[i].name, 4) + render(r.nu[i]) + "\n";
    }
    j["nu"] = c;
  }
  if (ef) {
    j["efV"] = toJson(r.efV);
    j["efJ"] = json::array();
    for (const auto& m : r.efJ) j["efJ"].push_back(toJson(m));
    for (std::size_t k = 0; k < r.efJ.size(); ++k)
      s += "EF^J" + std::to_string(k) + " (" + r.parabolics[k].type + ")\n" + matrixText(toJson(r.efJ[k]));
    s += "EF^a_el in basis v1..v5\n" + matrixText(toJson(r.efV));
  }
  if (formal) {
    json c = json::array();
    s += "formal degrees\n";
    for (std::size_t i = 0; i < r.formal.size(); ++i) {
      json e = toJsonFactored(r.formal[i]);
      e["v"] = r.vLabels[i];
      c.push_back(e);
      s += "  v" + std::to_string(i + 1) + " " + pad(r.vLabels[i], 8) + render(r.formal[i]) + "\n";
    }
    j["formal"] = c;
  }
  return emit(o, j, s);
}

int cmdIndependence(const Options& o, const std::string& type)
{
  auto w = weylGroup(type);
  auto r = independenceCheck(*w);
  json pairs = json::array();
  std::string s = w->name() + ": rank " + std::to_string(r.rank) + " on " + std::to_string(r.ellipticCount) +
                  " elliptic classes, " + (r.independent ? "independent" : "dependent") + "\n";
  for (auto [a, b] : r.coincidentPairs) {
    const auto& ca = w->classes()[a];
    pairs.push_back({ca.name, w->classes()[b].name});
    s += "  " + ca.name + " ~ " + w->classes()[b].name + "  det(1-qw) = " + render(RationalFunction(ca.charPoly)) +
         "\n";
  }
  json j{{"group", w->name()},
         {"rank", r.rank},
         {"elliptic", r.ellipticCount},
         {"independent", r.independent},
         {"coincidentPairs", pairs}};
  return emit(o, j, s);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Elliptic fake degrees, exotic Fourier transforms and formal degrees"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--fixtures", o.fixtures, "directory overriding the embedded fixtures");

  std::string type, label, gamma, id, suite;
  bool table = false, sgn = false, nonzero = false, cls = false, nu = false, ef = false, formal = false;

  auto* group = app.add_subcommand("group", "classes and character table of a Weyl group");
  group->add_option("type", type, "e.g. G2, B3, D4")->required();
  group->add_flag("--table", table, "include the character table");

  auto* fake = app.add_subcommand("fake", "fake degrees f_E(q)");
  fake->add_option("type", type)->required();
  fake->add_option("--char", label, "one irreducible by label");

  auto* efd = app.add_subcommand("efd", "elliptic fake degrees F_E(q)");
  efd->add_option("type", type)->required();
  efd->add_option("--char", label, "one irreducible by label");
  efd->add_flag("--sgn", sgn, "sign character from the exponents (works for E6, E7, E8)");
  efd->add_flag("--nonzero", nonzero, "omit characters with F = 0");

  auto* fourier = app.add_subcommand("fourier", "exotic Fourier matrix");
  fourier->add_option("--gamma", gamma, "1, Z2, S3, S4, S5, Z2^2, Z2^3")->required();

  auto* mx = app.add_subcommand("mx", "product formula m_x(q)");
  mx->add_option("--fixture", id, "parameter id; all when omitted");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> names = verifySuites();
  names.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(names));

  auto* affine = app.add_subcommand("affine", "affine elliptic data");
  affine->add_option("type", type)->required();
  affine->add_flag("--classes", cls);
  affine->add_flag("--nu", nu);
  affine->add_flag("--ef", ef);
  affine->add_flag("--formal", formal);

  auto* indep = app.add_subcommand("independence", "linear independence of 1/det(1-qw) on elliptic classes");
  indep->add_option("type", type)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!o.fixtures.empty()) FixtureRegistry::instance().setDirectory(o.fixtures);
    if (*group) return cmdGroup(o, type, table);
    if (*fake) return cmdFake(o, type, label);
    if (*efd) return cmdEfd(o, type, label, sgn, nonzero);
    if (*fourier) return cmdFourier(o, gamma);
    if (*mx) return cmdMx(o, id);
    if (*verify) return cmdVerify(o, suite);
    if (*affine) return cmdAffine(o, type, cls, nu, ef, formal);
    if (*indep) return cmdIndependence(o, type);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
