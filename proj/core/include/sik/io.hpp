// io.hpp — file formats: the shared JSON matrix layout, paths, forms,
// reports, audit CSV/JSONL, and mean-index experiment configs.

#pragma once

#include "sik/mean_index.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace sik::io {

using json = nlohmann::json;

// { "rows": r, "cols": c, "data": [[re, im], ...] } in row-major order.
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

// { "tau": tau, "samples": [{ "t": t, "matrix": ... }] }
json path_to_json(const SymplecticPath& p);
SymplecticPath path_from_json(const json& j);

// { "basis": frame, "matrix": matrix }
json form_to_json(const HermitianForm& f);
HermitianForm form_from_json(const json& j);

// { "value": int, "method": string, "diagnostics": { ... } }
json index_report_to_json(const IndexReport& r);

json audit_to_json(const AuditReport& r);
void write_audit_jsonl(std::ostream& os, const std::vector<AuditReport>& reports);
// Header: instance,check,lhs,rhs,pass
void write_audit_csv(std::ostream& os, const std::vector<AuditReport>& reports);

struct MeanIndexConfig {
  int n = 1;
  FlowSpec flow;
  FieldSpec field;
  std::vector<Eigen::VectorXd> xis;
  std::vector<double> schedule;
  double step = 0.0;  // 0 = choose automatically
};

MeanIndexConfig mean_config_from_json(const json& j);
json mean_config_to_json(const MeanIndexConfig& c);

// Header: xi_id,tau,i_tau,ratio,band_lo,band_hi
void write_mean_csv(std::ostream& os, const std::vector<MeanIndexReport>& reports);
json mean_summary_json(const std::vector<MeanIndexReport>& reports);

json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

// Fixed-width float formatting so identical runs give identical bytes.
std::string format_double(double v);

}  // namespace sik::io
