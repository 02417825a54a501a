// aqlab: command-line front end. One JSON document on stdout per run,
// diagnostics on stderr. Exit 0 whenever a verdict was computed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "aqlab/cli.hpp"

namespace {

using aqlab::io::json;

int emit(const json& doc) {
  std::cout << aqlab::io::dump(doc) << '\n';
  for (const auto& w : doc.value("warnings", json::array())) std::cerr << "warning: " << w.get<std::string>() << '\n';
  return 0;
}

/// AQLAB_TOL overrides the command's default tolerance.
void apply_env_tol(json& in) {
  if (const char* t = std::getenv("AQLAB_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(t, &end);
    if (end == t || *end != '\0' || !(v > 0)) throw aqlab::error(aqlab::errc::bad_input, "AQLAB_TOL must be a positive number");
    in["tolerance"] = v;
  }
}

json read_doc(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    try {
      return json::parse(ss.str());
    } catch (const json::exception& e) {
      throw aqlab::error(aqlab::errc::bad_input, std::string("stdin: ") + e.what());
    }
  }
  return aqlab::io::read_json_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for alpha-quaternionic geometry"};
  app.require_subcommand(1);

  int alpha = 0;

  auto* pauli = app.add_subcommand("pauli", "Generalized Pauli matrices");
  pauli->add_option("--alpha", alpha, "signature, -1 or 1")->required();

  auto* spin = app.add_subcommand("spinbasis", "Spinbasis of an orthonormal IQ basis");
  std::vector<double> j1, j2, j3;
  bool random = false, reversed = false;
  std::uint64_t seed = 0;
  spin->add_option("--alpha", alpha, "signature, -1 or 1")->required();
  spin->add_option("--j1", j1, "i, j, k coefficients of j1")->expected(3);
  spin->add_option("--j2", j2, "i, j, k coefficients of j2")->expected(3);
  spin->add_option("--j3", j3, "i, j, k coefficients of j3")->expected(3);
  spin->add_flag("--random", random, "draw a random orthonormal basis");
  spin->add_flag("--reversed", reversed, "with --random: reverse the orientation");
  spin->add_option("--seed", seed, "seed for --random");

  auto* sd = app.add_subcommand("selfdual", "Self-dual decomposition and the endomorphism of a 2-form");
  std::vector<double> omega;
  int orientation = 1;
  sd->add_option("--alpha", alpha, "signature, -1 or 1")->required();
  sd->add_option("--omega", omega, "components w12 w13 w14 w23 w24 w34")->expected(6)->required();
  sd->add_option("--orientation", orientation, "1 or -1");

  auto* ein = app.add_subcommand("einstein", "Einstein metrics of the two-parameter family on GxG");
  std::string catalog_name, algebra_file, csv_path;
  double lambda = 0, mu = 0, res = 0;
  bool classify = false;
  auto* o_cat = ein->add_option("--catalog", catalog_name, "su2, sl2r or so4");
  auto* o_alg = ein->add_option("--algebra", algebra_file, "algebra JSON file");
  o_cat->excludes(o_alg);
  auto* o_l = ein->add_option("--lambda", lambda);
  auto* o_m = ein->add_option("--mu", mu);
  auto* o_c = ein->add_flag("--classify", classify, "list all Einstein parameters");
  auto* o_s = ein->add_option("--sweep", res, "grid resolution of a disc sweep");
  ein->add_option("--csv", csv_path, "with --sweep: write lambda,mu,measure rows");
  o_c->excludes(o_s)->excludes(o_l)->excludes(o_m);
  o_s->excludes(o_l)->excludes(o_m);

  auto* pq = app.add_subcommand("piaq", "Predicates of a parallelizable AQ structure");
  std::string model_file, doubled, predicate, twistor = "I";
  std::vector<double> eigen;
  pq->add_option("--model", model_file, "model JSON file");
  pq->add_option("--doubled", doubled, "catalog name or algebra file for the doubled model");
  pq->add_option("--predicate", predicate, "integrable | semiholonomic | three-web | involutive | isoclinic | nijenhuis")
      ->required();
  pq->add_option("--twistor", twistor, "I, J or K (involutive)");
  pq->add_option("--eigenvalue", eigen, "re im (involutive)")->expected(2);
  auto* o_mu = pq->add_option("--mu", mu, "isoclinic parameter");

  auto* ver = app.add_subcommand("verify", "Recompute a result document and compare verdicts");
  std::string doc_path;
  ver->add_option("document", doc_path, "result document, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    json in;
    std::string command;
    if (pauli->parsed()) {
      command = "pauli";
      in = {{"alpha", alpha}};
    } else if (spin->parsed()) {
      command = "spinbasis";
      in = {{"alpha", alpha}};
      if (random) {
        std::mt19937_64 rng(seed);
        const auto B = aqlab::random_iq_basis(aqlab::alpha_from_int(alpha), rng, reversed);
        auto tri = [](const aqlab::QuaternionA& q) { return json::array({q.b(), q.c(), q.d()}); };
        in["seed"] = seed;
        in["reversed"] = reversed;
        in["j1"] = tri(B.j1), in["j2"] = tri(B.j2), in["j3"] = tri(B.j3);
      } else {
        if (j1.empty() || j2.empty() || j3.empty()) throw aqlab::error(aqlab::errc::bad_input, "give --j1 --j2 --j3 or --random");
        in["j1"] = j1, in["j2"] = j2, in["j3"] = j3;
      }
    } else if (sd->parsed()) {
      command = "selfdual";
      in = {{"alpha", alpha}, {"omega", omega}, {"orientation", orientation}};
    } else if (ein->parsed()) {
      command = "einstein";
      if (!catalog_name.empty()) in["algebra"] = catalog_name;
      else if (!algebra_file.empty()) in["algebra"] = aqlab::io::read_json_file(algebra_file);
      else throw aqlab::error(aqlab::errc::bad_input, "give --catalog or --algebra");
      if (classify) in["mode"] = "classify";
      else if (*o_s) in["mode"] = "sweep", in["resolution"] = res;
      else if (*o_l && *o_m) in["mode"] = "point", in["lambda"] = lambda, in["mu"] = mu;
      else throw aqlab::error(aqlab::errc::bad_input, "give --lambda and --mu, --classify or --sweep");
    } else if (pq->parsed()) {
      command = "piaq";
      if (!model_file.empty()) in["model"] = aqlab::io::read_json_file(model_file);
      else if (!doubled.empty()) {
        std::ifstream probe(doubled);
        in["doubled"] = probe ? aqlab::io::read_json_file(doubled) : json(doubled);
      } else throw aqlab::error(aqlab::errc::bad_input, "give --model or --doubled");
      in["predicate"] = predicate;
      if (predicate == "involutive") {
        in["twistor"] = twistor;
        in["eigenvalue"] = eigen.empty() ? std::vector<double>{1.0, 0.0} : eigen;
      }
      if (*o_mu) in["mu"] = mu;
    } else if (ver->parsed()) {
      return emit(aqlab::cli::verify(read_doc(doc_path)));
    }
    apply_env_tol(in);
    json doc = aqlab::cli::run(command, in);

    if (command == "einstein" && in.value("mode", "") == "sweep" && !csv_path.empty()) {
      std::ofstream csv(csv_path);
      if (!csv) throw aqlab::error(aqlab::errc::bad_input, "cannot write '" + csv_path + "'");
      csv << "lambda,mu,relative_offdiagonal\n";
      const int K = static_cast<int>(std::floor(1.0 / res));
      for (int i = -K; i <= K; ++i)
        for (int j = -K; j <= K; ++j) {
          const double l = i * res, m = j * res;
          if (1 - l * l - m * m <= aqlab::degenerate_tol) continue;
          csv << aqlab::io::format_double(l) << ',' << aqlab::io::format_double(m) << ','
              << aqlab::io::format_double(aqlab::einstein_measure(l, m).relative()) << '\n';
        }
    }
    return emit(doc);
  } catch (const aqlab::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
