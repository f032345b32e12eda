#include "sik/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sik::io {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json matrix_to_json(const Mat& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Mat matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw std::invalid_argument("matrix: expected {rows, cols, data}");
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (rows < 0 || cols < 0 || !data.is_array() ||
      data.size() != static_cast<std::size_t>(rows * cols))
    throw std::invalid_argument("matrix: data length does not match rows*cols");
  Mat m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index jj = 0; jj < cols; ++jj, ++k) {
      const auto& e = data[k];
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix: entries must be [re, im] pairs");
      m(i, jj) = cd(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

json path_to_json(const SymplecticPath& p) {
  json samples = json::array();
  for (double t : p.knots())
    samples.push_back(json{{"t", t}, {"matrix", matrix_to_json(p.value(t))}});
  return json{{"tau", p.tau()}, {"samples", std::move(samples)}};
}

SymplecticPath path_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tau") || !j.contains("samples"))
    throw std::invalid_argument("path: expected {tau, samples}");
  const double tau = j.at("tau").get<double>();
  std::vector<std::pair<double, Mat>> samples;
  for (const auto& s : j.at("samples")) {
    if (!s.contains("t") || !s.contains("matrix"))
      throw std::invalid_argument("path: sample needs {t, matrix}");
    samples.emplace_back(s.at("t").get<double>(), matrix_from_json(s.at("matrix")));
  }
  return SymplecticPath::from_samples(tau, samples);
}

json form_to_json(const HermitianForm& f) {
  return json{{"basis", matrix_to_json(f.basis)}, {"matrix", matrix_to_json(f.matrix)}};
}

HermitianForm form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("matrix"))
    throw std::invalid_argument("form: expected {basis, matrix}");
  return HermitianForm{matrix_from_json(j.at("basis")), matrix_from_json(j.at("matrix"))};
}

json index_report_to_json(const IndexReport& r) {
  json diag;
  if (r.evaluations > 0) diag["evaluations"] = r.evaluations;
  if (r.phases_start.size()) {
    diag["max_matched_jump"] = r.max_matched_jump;
    diag["phases_start"] = std::vector<double>(r.phases_start.data(),
                                               r.phases_start.data() + r.phases_start.size());
    diag["phases_end"] = std::vector<double>(r.phases_end.data(),
                                             r.phases_end.data() + r.phases_end.size());
  }
  if (!r.crossing_times.empty() || r.method == "maslov-crossings") {
    diag["crossing_times"] = r.crossing_times;
    diag["crossing_signs"] = r.crossing_signs;
  }
  if (r.nullity_start >= 0) diag["nullity_start"] = r.nullity_start;
  if (r.nullity_end >= 0) diag["nullity_end"] = r.nullity_end;
  return json{{"value", r.value}, {"method", r.method}, {"diagnostics", std::move(diag)}};
}

json audit_to_json(const AuditReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation},
                          {"rhs", c.rhs}, {"pass", c.pass}});
  return json{{"instance", r.instance}, {"seed", r.seed}, {"checks", std::move(checks)},
              {"pass", r.all_pass()}};
}

void write_audit_jsonl(std::ostream& os, const std::vector<AuditReport>& reports) {
  for (const auto& r : reports) os << audit_to_json(r).dump() << "\n";
}

void write_audit_csv(std::ostream& os, const std::vector<AuditReport>& reports) {
  os << "instance,check,lhs,rhs,pass\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      os << r.instance << "," << c.name << "," << format_double(c.lhs) << ","
         << format_double(c.rhs) << "," << (c.pass ? 1 : 0) << "\n";
}

namespace {

Eigen::VectorXd vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a number array");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

}  // namespace

MeanIndexConfig mean_config_from_json(const json& j) {
  MeanIndexConfig c;
  c.n = j.at("n").get<int>();
  if (c.n < 1) throw std::invalid_argument("config: n must be >= 1");
  const int d = j.at("torus_dim").get<int>();
  c.flow.velocity = vector_from_json(j.at("velocity"));
  if (c.flow.dim() != d) throw std::invalid_argument("config: velocity length != torus_dim");

  const auto& field = j.at("field");
  for (const auto& t : field.at("terms")) {
    FieldTerm term;
    const auto wave = t.at("wave");
    term.wave.resize(static_cast<Eigen::Index>(wave.size()));
    for (std::size_t i = 0; i < wave.size(); ++i)
      term.wave(static_cast<Eigen::Index>(i)) = wave[i].get<int>();
    if (term.wave.size() != d) throw std::invalid_argument("config: wave length != torus_dim");
    const std::string type = t.value("type", "cos");
    if (type != "cos" && type != "sin")
      throw std::invalid_argument("config: term type must be cos or sin");
    term.is_sin = (type == "sin");
    term.coeff = matrix_from_json(t.at("matrix"));
    if (term.coeff.rows() != 2 * c.n)
      throw std::invalid_argument("config: field matrices must be 2n x 2n");
    c.field.terms.push_back(std::move(term));
  }
  c.field.validate();

  const auto& xi = j.at("xi");
  if (!xi.is_array() || xi.empty()) throw std::invalid_argument("config: xi must be nonempty");
  if (xi[0].is_number()) {
    c.xis.push_back(vector_from_json(xi));
  } else {
    for (const auto& p : xi) c.xis.push_back(vector_from_json(p));
  }
  for (const auto& p : c.xis)
    if (p.size() != d) throw std::invalid_argument("config: xi length != torus_dim");

  for (const auto& t : j.at("schedule")) c.schedule.push_back(t.get<double>());
  c.step = j.value("step", 0.0);
  return c;
}

json mean_config_to_json(const MeanIndexConfig& c) {
  json terms = json::array();
  for (const auto& t : c.field.terms) {
    terms.push_back(json{
        {"wave", std::vector<int>(t.wave.data(), t.wave.data() + t.wave.size())},
        {"type", t.is_sin ? "sin" : "cos"},
        {"matrix", matrix_to_json(t.coeff)}});
  }
  json xis = json::array();
  for (const auto& p : c.xis)
    xis.push_back(std::vector<double>(p.data(), p.data() + p.size()));
  return json{{"n", c.n},
              {"torus_dim", c.flow.dim()},
              {"velocity", std::vector<double>(c.flow.velocity.data(),
                                               c.flow.velocity.data() + c.flow.dim())},
              {"field", json{{"terms", std::move(terms)}}},
              {"xi", std::move(xis)},
              {"schedule", c.schedule},
              {"step", c.step}};
}

void write_mean_csv(std::ostream& os, const std::vector<MeanIndexReport>& reports) {
  os << "xi_id,tau,i_tau,ratio,band_lo,band_hi\n";
  for (std::size_t id = 0; id < reports.size(); ++id)
    for (const auto& row : reports[id].rows)
      os << id << "," << format_double(row.tau) << "," << row.i_tau << ","
         << format_double(row.ratio) << "," << format_double(row.band_lo) << ","
         << format_double(row.band_hi) << "\n";
}

json mean_summary_json(const std::vector<MeanIndexReport>& reports) {
  json out = json::array();
  for (std::size_t id = 0; id < reports.size(); ++id) {
    const auto& r = reports[id];
    json gaps = json::array();
    for (const auto& row : r.rows)
      if (row.cauchy_gap >= 0) gaps.push_back(row.cauchy_gap);
    out.push_back(json{{"xi_id", id},
                       {"xi", std::vector<double>(r.xi.data(), r.xi.data() + r.xi.size())},
                       {"f_hat", r.f_hat},
                       {"bound_c", r.bound_c},
                       {"ratios_in_band", r.ratios_in_band},
                       {"cauchy_gaps", std::move(gaps)}});
  }
  return json{{"estimates", std::move(out)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

}  // namespace sik::io
