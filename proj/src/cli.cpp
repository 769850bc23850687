#include "isotori/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isotori/serialize.hpp"

namespace isotori::cli {

namespace {

using io::Json;

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    return Json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument((path == "-" ? std::string("stdin") : path) + ": malformed JSON: " + e.what());
  }
}

// Accepts a bare matrix or {"matrix": …}.
RationalMatrix read_matrix(const std::string& path, std::istream& in) {
  Json j = read_json(path, in);
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  return io::rational_matrix_from_json(j);
}

strictify::FiniteGroup load_group(const std::string& source, std::istream& in) {
  try {
    return strictify::FiniteGroup::preset(source);
  } catch (const std::invalid_argument&) {
    if (source != "-" && !std::ifstream(source)) throw;
  }
  return io::group_from_json(read_json(source, in));
}

struct Options {
  std::string lhs, rhs, input;
  bool witness = false;
  bool oracle = false;
  std::vector<std::string> areas;
  std::vector<std::int64_t> l_vector;
  std::string group, coeff = "Qstar";
  std::optional<std::uint64_t> seed;
};

int do_classify(const Options& o, std::istream& in, std::ostream& out) {
  const auto a = io::torus_from_json(read_json(o.lhs, in));
  const auto b = io::torus_from_json(read_json(o.rhs, in));
  const equivalence::ClassificationReport r = equivalence::classify(a, b);
  Json j = io::to_json(r, o.witness);
  if (o.oracle) {
    const auto oa = symptorus::omega(a), ob = symptorus::omega(b);
    if (oa.dimension() != ob.dimension()) {
      j["oracle"] = Json{{"skipped", "dimensions differ"}};
    } else {
      const ScaledPair scaled = lcd_scale(oa.matrix(), ob.matrix());
      const long bound = oa.dimension() == 2 ? 3 : 1;
      const congruence::Verdict v = congruence::bruteforce_congruent(scaled.first, scaled.second, bound);
      j["oracle"] = Json{{"bound", bound}, {"equivalent", v.equivalent}, {"consistent", !v.equivalent || r.symplectomorphic}};
    }
  }
  emit(out, j);
  return r.symplectomorphic ? 0 : 1;
}

int do_reduce(const Options& o, std::ostream& out) {
  std::vector<Rational> areas;
  for (const auto& s : o.areas) areas.push_back(parse_rational(s));
  const symptorus::QuotientReduction red = symptorus::reduce_general_quotient(areas, o.l_vector);
  Json j = io::to_json(red.torus);
  j["coordinates"] = red.coordinates;
  emit(out, j);
  return 0;
}

int do_divisors(const Options& o, std::istream& in, std::ostream& out) {
  const congruence::AntisymmetricForm form(read_matrix(o.input, in));
  const Integer scale = common_denominator(form.matrix());
  const congruence::NormalForm nf = congruence::symplectic_divisors(to_integer(Rational(scale) * form.matrix()));
  Json j{{"divisors", io::to_json(nf.chain)}};
  if (scale != 1) j["scale"] = io::to_json(scale);
  emit(out, j);
  return 0;
}

int do_strictify(const Options& o, std::istream& in, std::ostream& out) {
  const strictify::FiniteGroup g = load_group(o.group, in);
  const strictify::CoefficientGroup a = strictify::CoefficientGroup::parse(o.coeff, g);
  const strictify::SpanningTree tree = strictify::spanning_tree(strictify::cayley_graph(g));

  std::optional<strictify::CoherentActionData> data;
  strictify::TreeAssignment assignment;
  if (o.seed) {
    Rng rng(*o.seed);
    data = strictify::random_cocycle(g, a, rng);
    for (const auto& e : tree.edges) assignment[e] = a.random_element(rng);
  } else {
    data = strictify::trivial_action_data(g, a);
  }
  const strictify::CompatibleSystem sys = strictify::strictify(*data, assignment);

  Json tree_json = Json::array();
  for (const auto& e : tree.edges) {
    auto it = assignment.find(e);
    tree_json.push_back(Json{{"from", e.from},
                             {"to", e.to},
                             {"label", e.label},
                             {"value", io::to_json(it == assignment.end() ? a.identity() : it->second)}});
  }
  Json system = Json::array();
  for (const auto& row : sys.f) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(io::to_json(v));
    system.push_back(std::move(r));
  }
  Json phi = Json::array();
  for (const auto& row : data->table()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(io::to_json(v));
    phi.push_back(std::move(r));
  }
  Json j;
  j["group"] = io::to_json(g);
  j["coefficients"] = a.name();
  j["seed"] = o.seed ? Json(*o.seed) : Json(nullptr);
  j["phi"] = std::move(phi);
  j["tree"] = std::move(tree_json);
  j["system"] = std::move(system);
  j["verified"] = strictify::verify_compatibility(sys, *data);
  emit(out, j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify special isogenous tori and their mirrors; strictify finite group actions", "isotori"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Symplectomorphism and derived-equivalence verdicts for two tori");
  classify->add_option("lhs", o.lhs, "torus JSON (or -)")->required();
  classify->add_option("rhs", o.rhs, "torus JSON (or -)")->required();
  classify->add_flag("--witness", o.witness, "include the unimodular witness");
  classify->add_flag("--oracle", o.oracle, "cross-check with the brute-force decider (dimension <= 4)");

  auto* mirror = app.add_subcommand("mirror", "Mirror analytic torus of a special isogenous torus");
  mirror->add_option("torus", o.input, "torus JSON (or -)")->required();

  auto* dual = app.add_subcommand("dual", "Dual lattice of an analytic torus");
  dual->add_option("torus", o.input, "analytic torus or lattice JSON (or -)")->required();

  auto* reduce = app.add_subcommand("reduce", "Rewrite a general quotient as a product of special isogenous tori");
  reduce->add_option("--areas", o.areas, "comma-separated areas")->required()->delimiter(',');
  reduce->add_option("--l-vector", o.l_vector, "comma-separated orders with gcd 1")->required()->delimiter(',');

  auto* strict = app.add_subcommand("strictify", "Compatible system for a coherent action on a finite group");
  strict->add_option("--group", o.group, "preset (Z<n>, S3, D4, Z2xZ2) or group JSON file")->required();
  strict->add_option("--coeff", o.coeff, "Qstar, Qstar-sign, Z<m> or Z<m>-sign")->capture_default_str();
  strict->add_option("--seed", o.seed, "random cocycle and tree assignment; trivial data when absent");

  auto* divisors = app.add_subcommand("divisors", "Symplectic elementary divisors of an antisymmetric matrix");
  divisors->add_option("omega", o.input, "matrix JSON (or -)")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit(out, Json{{"error", e.what()}});
    err << app.help();
    return 2;
  }

  try {
    if (classify->parsed()) return do_classify(o, in, out);
    if (mirror->parsed()) {
      emit(out, io::to_json(equivalence::mirror(io::torus_from_json(read_json(o.input, in)))));
      return 0;
    }
    if (dual->parsed()) {
      emit(out, io::to_json(analytic::dual(io::analytic_from_json(read_json(o.input, in)).lattice)));
      return 0;
    }
    if (reduce->parsed()) return do_reduce(o, out);
    if (strict->parsed()) return do_strictify(o, in, out);
    if (divisors->parsed()) return do_divisors(o, in, out);
  } catch (const equivalence::TheoremViolation& e) {
    emit(out, Json{{"error", e.what()},
                   {"omega_lhs", io::to_json(e.omega_lhs())},
                   {"omega_rhs", io::to_json(e.omega_rhs())},
                   {"block_lhs", io::to_json(e.block_lhs())},
                   {"block_rhs", io::to_json(e.block_rhs())}});
    err << "theorem violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    emit(out, Json{{"error", e.what()}});
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace isotori::cli
