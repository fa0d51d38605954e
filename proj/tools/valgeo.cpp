#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "valgeo/algebra.hpp"
#include "valgeo/body_io.hpp"
#include "valgeo/harness.hpp"
#include "valgeo/sampling.hpp"
#include "valgeo/valuations.hpp"

using nlohmann::json;
using namespace valgeo;

namespace {

json scaled_to_json(const ScaledRational& s) {
  return json{{"q", s.q_str()}, {"pi_exp", s.pi_exp()}};
}

json valuation_to_json(const InvariantValuation& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs) coeffs.push_back(scaled_to_json(c));
  return json{{"dim", v.dim}, {"coeffs", coeffs}};
}

json tensor_to_json(const KinematicTensor& t) {
  json rows = json::array();
  for (int i = 0; i <= t.dim; ++i) {
    json row = json::array();
    for (int j = 0; j <= t.dim; ++j) row.push_back(scaled_to_json(t.entries[i][j]));
    rows.push_back(row);
  }
  return json{{"dim", t.dim}, {"entries", rows}};
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    f << j.dump(2) << "\n";
  }
}

std::vector<NamedBody> default_bodies(int n) {
  if (n == 2)
    return {{"unit-square", make_cube(2)}, {"triangle", make_simplex(2)}};
  return {{"unit-cube", make_cube(3)}, {"simplex", make_simplex(3)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valgeo: convex valuations and integral geometry toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 42;
  long samples = 100000;
  int threads = 0;
  std::string out;
  app.add_option("--seed", seed, "RNG seed (propagates to all streams)");
  app.add_option("--samples", samples, "Monte Carlo sample count");
  app.add_option("--threads", threads, "worker thread cap (0 = hardware)");
  app.add_option("--out", out, "write JSON output to file instead of stdout");

  auto config = [&] {
    return json{{"seed", seed}, {"samples", samples}, {"threads", threads}};
  };

  // --- intrinsic -------------------------------------------------------------
  auto* cmd_intr = app.add_subcommand("intrinsic", "intrinsic volumes of a body");
  std::string body_path;
  bool mc_only = false;
  cmd_intr->add_option("--body", body_path, "body JSON file")->required();
  cmd_intr->add_flag("--mc-only", mc_only, "skip the exact closed forms");
  cmd_intr->callback([&] {
    Polytope p = body_from_file(body_path);
    json j;
    j["command"] = "intrinsic";
    j["config"] = config();
    auto mc = intrinsic_volumes_mc(p, samples, RngStream(seed), threads);
    j["values"] = mc.values;
    j["stderr"] = mc.stderrs;
    if (!mc_only && (p.dim() == 2 || p.dim() == 3)) {
      j["exact_values"] = intrinsic_volumes_exact(p);
      j["exact"] = true;
    }
    emit(j, out);
  });

  // --- mixed-volume ----------------------------------------------------------
  auto* cmd_mv = app.add_subcommand("mixed-volume", "mixed volume of n bodies");
  std::vector<std::string> body_paths;
  cmd_mv->add_option("--bodies", body_paths, "n body JSON files")->required();
  cmd_mv->callback([&] {
    std::vector<Polytope> bodies;
    for (const auto& f : body_paths) bodies.push_back(body_from_file(f));
    json j;
    j["command"] = "mixed-volume";
    j["config"] = config();
    j["value"] = mixed_volume(bodies);
    j["exact"] = true;
    emit(j, out);
  });

  // --- minkowski -------------------------------------------------------------
  auto* cmd_mk = app.add_subcommand("minkowski", "Minkowski sum of two bodies");
  std::string path_a, path_b;
  cmd_mk->add_option("--a", path_a)->required();
  cmd_mk->add_option("--b", path_b)->required();
  cmd_mk->callback([&] {
    Polytope s = minkowski_sum(body_from_file(path_a), body_from_file(path_b));
    json j = body_to_json(s);
    j["command"] = "minkowski";
    j["config"] = config();
    j["volume"] = volume(s);
    j["exact"] = true;
    emit(j, out);
  });

  // --- convolve (mu_A * mu_B on bodies) ---------------------------------------
  auto* cmd_conv = app.add_subcommand(
      "convolve", "Minkowski convolution mu_A * mu_B, optionally evaluated on K");
  std::string path_k;
  cmd_conv->add_option("--a", path_a)->required();
  cmd_conv->add_option("--b", path_b)->required();
  cmd_conv->add_option("--eval", path_k, "body K to evaluate the convolution on");
  cmd_conv->callback([&] {
    Polytope a = body_from_file(path_a);
    Polytope b = body_from_file(path_b);
    auto conv = formal_convolve(mu_A_expand(a), mu_A_expand(b));
    json j;
    j["command"] = "convolve";
    j["config"] = config();
    json terms = json::array();
    for (const auto& t : conv.terms)
      terms.push_back({{"coeff", t.coeff},
                       {"degree", conv.term_degree(t)},
                       {"bodies", t.bodies.size()}});
    j["terms"] = terms;
    if (!path_k.empty()) {
      Polytope k = body_from_file(path_k);
      j["value"] = formal_evaluate(conv, k);
      j["check_vol_A_plus_B_plus_K"] =
          volume(minkowski_sum(minkowski_sum(a, b), k));
      j["exact"] = true;
    }
    emit(j, out);
  });

  // --- product ---------------------------------------------------------------
  auto* cmd_prod = app.add_subcommand(
      "product", "Alesker product: exact mu_i . mu_j, or Monte Carlo mu_A . phi (K)");
  int dim = 2, bi = 0, bj = 0;
  std::string phi_name = "chi";
  cmd_prod->add_option("--dim", dim);
  cmd_prod->add_option("--i", bi);
  cmd_prod->add_option("--j", bj);
  cmd_prod->add_option("--a", path_a, "body A for the MC product");
  cmd_prod->add_option("--phi", phi_name, "chi | vol");
  cmd_prod->add_option("--k", path_k, "body K for the MC product");
  cmd_prod->callback([&] {
    json j;
    j["command"] = "product";
    j["config"] = config();
    if (path_a.empty()) {
      auto t = build_tables(dim);
      auto r = product(InvariantValuation::basis(dim, bi),
                       InvariantValuation::basis(dim, bj), t);
      j["result"] = valuation_to_json(r);
      j["exact"] = true;
    } else {
      Polytope a = body_from_file(path_a);
      Polytope k = body_from_file(path_k);
      ValuationFn phi = (phi_name == "vol") ? make_volume_functional() : make_chi_functional();
      auto est = product_mc(a, phi, k, samples, RngStream(seed), threads);
      j["value"] = est.value;
      j["stderr"] = est.stderr_;
      j["samples"] = est.samples;
    }
    emit(j, out);
  });

  // --- dualize ---------------------------------------------------------------
  auto* cmd_dual = app.add_subcommand("dualize", "duality transform D on the mu basis");
  int dk = 0;
  cmd_dual->add_option("--dim", dim)->required();
  cmd_dual->add_option("--k", dk, "dualize the basis element mu_k")->required();
  cmd_dual->callback([&] {
    json j;
    j["command"] = "dualize";
    j["config"] = config();
    j["result"] = valuation_to_json(dual(InvariantValuation::basis(dim, dk)));
    j["exact"] = true;
    emit(j, out);
  });

  // --- coproduct ---------------------------------------------------------------
  auto* cmd_cop = app.add_subcommand("coproduct", "kinematic or additive coproduct tensor");
  bool additive = false;
  cmd_cop->add_option("--dim", dim)->required();
  cmd_cop->add_option("--k", dk)->required();
  cmd_cop->add_flag("--additive", additive, "additive coproduct a_G instead of k_G");
  cmd_cop->callback([&] {
    json j;
    j["command"] = "coproduct";
    j["config"] = config();
    j["result"] =
        tensor_to_json(additive ? additive_coproduct(dim, dk) : kinematic_coproduct(dim, dk));
    j["exact"] = true;
    emit(j, out);
  });

  // --- verify ------------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run verification campaigns");
  std::string which = "all";
  int failures = 0;
  cmd_verify->add_option("what", which, "exact | kinematic | additive | convolution | all");
  cmd_verify->add_option("--dim", dim);
  cmd_verify->callback([&] {
    json j;
    j["command"] = "verify";
    j["what"] = which;
    j["config"] = config();
    if (which == "exact" || which == "all") {
      json reports = json::array();
      for (const auto& r : verify_all(dim)) {
        reports.push_back(json::parse(r.to_json()));
        if (!r.pass) ++failures;
      }
      j["exact_suite"] = reports;
    }
    if (which == "kinematic" || which == "additive" || which == "convolution" ||
        which == "all") {
      SuiteOptions opts;
      opts.samples = samples;
      opts.threads = threads;
      opts.run_intersection = (which == "kinematic" || which == "all");
      opts.run_additive = (which == "additive" || which == "all");
      opts.run_convolution = (which == "convolution" || which == "all");
      int mc_dim = (dim == 3) ? 3 : 2;
      auto rep = run_identity_suite(mc_dim, default_bodies(mc_dim), RngStream(seed), opts);
      j["mc_suite"] = json::parse(rep.to_json());
      if (!rep.pass) ++failures;
    }
    j["status"] = failures == 0 ? "pass" : "fail";
    emit(j, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const BodyParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
