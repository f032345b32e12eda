#include "doctest.h"

#include "sik/io.hpp"
#include "sik/rng.hpp"

#include <sstream>

using namespace sik;
using sik::io::json;

namespace {
const Tolerances tol;
}

TEST_CASE("matrix round trip") {
  Rng rng(1);
  const Mat m = rng.cgaussian(3, 5);
  const Mat back = io::matrix_from_json(io::matrix_to_json(m));
  CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);
  // row-major data layout
  const json j = io::matrix_to_json(m);
  CHECK(j["rows"] == 3);
  CHECK(j["cols"] == 5);
  CHECK(j["data"].size() == 15);
  CHECK(j["data"][1][0].get<double>() == m(0, 1).real());
  CHECK(j["data"][1][1].get<double>() == m(0, 1).imag());
}

TEST_CASE("malformed matrices are rejected with clear messages") {
  CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 2}, {"cols", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 2},
                                            {"cols", 2},
                                            {"data", json::array({1, 2, 3, 4})}}),
                  std::invalid_argument);
  json short_data{{"rows", 2}, {"cols", 2}, {"data", json::array()}};
  CHECK_THROWS_AS(io::matrix_from_json(short_data), std::invalid_argument);
}

TEST_CASE("path round trip through samples") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  const SymplecticPath p = random_symplectic_path(sp, 4, 1.0, 3, 1.0);
  const SymplecticPath back = io::path_from_json(io::path_to_json(p));
  CHECK(back.tau() == doctest::Approx(1.0));
  for (double t : {0.0, 0.33, 0.5, 0.99, 1.0})
    CHECK((back.value(t) - p.value(t)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("form serialization keeps basis and matrix together") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  Mat a(2, 1), b(2, 1), c(2, 1);
  a << 1, 0;
  b << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  c << 0, 1;
  const HermitianForm q = q_form(sp, a, b, c, tol);
  const HermitianForm back = io::form_from_json(io::form_to_json(q));
  CHECK((back.matrix - q.matrix).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.basis - q.basis).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("audit reports serialize to CSV and JSONL") {
  AuditReport r;
  r.instance = "demo-1";
  r.seed = 7;
  r.add("alpha", 1.0, "<=", 2.0);
  r.add("beta", 3.0, "==", 4.0);
  std::ostringstream csv;
  io::write_audit_csv(csv, {r});
  const std::string text = csv.str();
  CHECK(text.find("instance,check,lhs,rhs,pass") == 0);
  CHECK(text.find("demo-1,alpha,1,2,1") != std::string::npos);
  CHECK(text.find("demo-1,beta,3,4,0") != std::string::npos);

  std::ostringstream jl;
  io::write_audit_jsonl(jl, {r});
  const json parsed = json::parse(jl.str());
  CHECK(parsed["pass"] == false);
  CHECK(parsed["checks"].size() == 2);
}

TEST_CASE("mean-index config parsing") {
  json cfg{{"n", 2},
           {"torus_dim", 2},
           {"velocity", {1.0, 1.4142}},
           {"field",
            {{"terms",
              {{{"wave", {0, 0}},
                {"type", "cos"},
                {"matrix", io::matrix_to_json(Mat::Identity(4, 4))}}}}}},
           {"xi", {{0.0, 0.0}, {0.5, 0.25}}},
           {"schedule", {16, 32}},
           {"step", 0.0625}};
  const io::MeanIndexConfig parsed = io::mean_config_from_json(cfg);
  CHECK(parsed.n == 2);
  CHECK(parsed.xis.size() == 2);
  CHECK(parsed.schedule.size() == 2);
  CHECK(parsed.field.terms.size() == 1);

  json single = cfg;
  single["xi"] = {0.1, 0.2};  // a single point instead of a list
  CHECK(io::mean_config_from_json(single).xis.size() == 1);

  json bad = cfg;
  bad["velocity"] = {1.0};
  CHECK_THROWS_AS(io::mean_config_from_json(bad), std::invalid_argument);

  json bad_field = cfg;
  bad_field["field"]["terms"][0]["matrix"] = io::matrix_to_json(Mat::Identity(2, 2));
  CHECK_THROWS_AS(io::mean_config_from_json(bad_field), std::invalid_argument);
}

TEST_CASE("mean CSV layout") {
  MeanIndexReport rep;
  rep.xi = Eigen::VectorXd::Zero(2);
  MeanIndexRow row;
  row.tau = 16;
  row.i_tau = 12;
  row.ratio = 0.75;
  row.band_lo = -0.5;
  row.band_hi = 0.75;
  rep.rows.push_back(row);
  std::ostringstream os;
  io::write_mean_csv(os, {rep});
  CHECK(os.str() == "xi_id,tau,i_tau,ratio,band_lo,band_hi\n0,16,12,0.75,-0.5,0.75\n");
}
