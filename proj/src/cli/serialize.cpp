#include "qprobe/cli/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qprobe::cli {

json real_json(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json vector_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(real_json(v(i)));
  return out;
}

json matrix_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

namespace {

std::vector<std::vector<double>> table(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("matrix: missing \"") + key + "\"");
  const json& rows = j.at(key);
  if (!rows.is_array()) throw InputError(std::string("matrix: \"") + key + "\" must be an array of rows");
  std::vector<std::vector<double>> out;
  for (const json& row : rows) {
    if (!row.is_array()) throw InputError(std::string("matrix: \"") + key + "\" rows must be arrays");
    std::vector<double> values;
    for (const json& x : row) {
      if (!x.is_number()) throw InputError("matrix: entries must be numbers");
      values.push_back(x.get<double>());
    }
    out.push_back(std::move(values));
  }
  return out;
}

int positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw InputError(std::string(what) + " must be a positive integer");
  return j.get<int>();
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw InputError("matrix: expected an object with \"re\" and \"im\"");
  const auto re = table(j, "re");
  const auto im = table(j, "im");
  if (re.size() != im.size() || re.empty()) throw InputError("matrix: \"re\" and \"im\" shapes differ or are empty");
  const std::size_t cols = re.front().size();
  ComplexMatrix m(static_cast<Eigen::Index>(re.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < re.size(); ++r) {
    if (re[r].size() != cols || im[r].size() != cols) throw InputError("matrix: ragged rows or mismatched shapes");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
  }
  if (!m.allFinite()) throw InputError("matrix: non-finite entries");
  return m;
}

json matrix_file_json(const BipartiteOperator& op) {
  json out = matrix_json(op.matrix());
  out["dims"] = {op.dim_a(), op.dim_b()};
  return out;
}

BipartiteOperator matrix_file_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims")) throw InputError("matrix file: missing \"dims\"");
  const json& dims = j.at("dims");
  if (!dims.is_array() || dims.size() != 2) throw InputError("matrix file: \"dims\" must be [dA, dB]");
  const int da = positive_int(dims[0], "dims[0]");
  const int db = positive_int(dims[1], "dims[1]");
  ComplexMatrix m = matrix_from_json(j);
  if (m.rows() != da * db || m.cols() != da * db) {
    throw InputError("matrix file: shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " does not match dims (" + std::to_string(da) + "," + std::to_string(db) + ")");
  }
  return {std::move(m), da, db};
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("cannot parse " + path.string() + ": " + e.what());
  }
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  BipartiteOperator op = matrix_file_from_json(load_json_file(path));
  if (const std::string why = density_violation(op); !why.empty()) {
    throw InputError(path.string() + " is not a density matrix: " + why);
  }
  return DensityMatrix(std::move(op));
}

json channel_json(const KrausChannel& ch) {
  json kraus = json::array();
  for (const ComplexMatrix& k : ch.kraus()) kraus.push_back(matrix_json(k));
  return {{"d_in", ch.d_in()}, {"d_out", ch.d_out()}, {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array()) {
    throw InputError("channel: expected {\"kraus\": [...]}");
  }
  std::vector<ComplexMatrix> kraus;
  for (const json& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  if (kraus.empty()) throw InputError("channel: empty Kraus list");
  try {
    KrausChannel ch(std::move(kraus));
    if (j.contains("d_in") && j.at("d_in") != ch.d_in()) throw InputError("channel: d_in does not match Kraus shape");
    if (j.contains("d_out") && j.at("d_out") != ch.d_out()) throw InputError("channel: d_out does not match Kraus shape");
    return ch;
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("channel: ") + e.what());
  }
}

json filter_json(const FilterPair& f) { return {{"A", matrix_json(f.a())}, {"B", matrix_json(f.b())}}; }

FilterPair filter_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B")) throw InputError("filter: expected {\"A\": ..., \"B\": ...}");
  try {
    return FilterPair(matrix_from_json(j.at("A")), matrix_from_json(j.at("B")));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("filter: ") + e.what());
  }
}

json report_json(const DiagnosticsReport& r) {
  return {
      {"dims", {r.dims.a, r.dims.b}},
      {"ccnr_value", real_json(r.ccnr_value)},
      {"ccnr_entangled", r.ccnr_entangled},
      {"ppt", r.ppt},
      {"min_eig_pt", real_json(r.min_eig_pt)},
      {"purity", real_json(r.purity)},
      {"realigned_spectrum", vector_json(r.realigned_spectrum)},
      {"faithful", r.faithful},
      {"schmidt_rank", r.schmidt_rank},
      {"condition_number", real_json(r.condition_number)},
  };
}

json rudolph_json(const RudolphReport& r) {
  auto outcome = [](const PropertyOutcome& p) {
    return json{{"passed", p.passed}, {"worst", real_json(p.worst)}, {"trials", p.trials}};
  };
  return {{"local_unitary_invariance", outcome(r.local_unitary)},
          {"product_ancilla_non_increase", outcome(r.product_ancilla)},
          {"luders_non_increase", outcome(r.luders_measurement)},
          {"all_passed", r.all_passed()}};
}

json filter_analysis_json(const FilterAnalysis& a) {
  return {{"before", report_json(a.before)},
          {"after", report_json(a.after)},
          {"ccnr_increased", a.ccnr_increased},
          {"faithfulness_lost", a.faithfulness_lost}};
}

json seesaw_json(const SeesawResult& r) {
  json restarts = json::array();
  for (const RestartSummary& s : r.restarts) {
    restarts.push_back({{"final_value", real_json(s.final_value)},
                        {"outer_iterations", s.outer_iterations},
                        {"converged", s.converged}});
  }
  json history = json::array();
  for (double v : r.history) history.push_back(real_json(v));
  return {{"best_value", real_json(r.best_value)},
          {"best_restart", r.best_restart},
          {"ppt_residual", real_json(r.ppt_residual)},
          {"psd_residual", real_json(r.psd_residual)},
          {"history", std::move(history)},
          {"restarts_summary", std::move(restarts)},
          {"best_state", matrix_file_json(BipartiteOperator(r.best_state, r.d, r.d))}};
}

json reconstruction_json(const ReconstructionResult& r) {
  json out{{"probe_report", report_json(r.probe_report)},
           {"probe_condition_number", real_json(r.probe_condition_number)},
           {"noise_level", real_json(r.noise_level)},
           {"superop_reconstructed", matrix_json(r.superop_reconstructed)},
           {"choi_reconstructed", matrix_file_json(r.choi_reconstructed.op())}};
  if (r.choi_true) out["choi_true"] = matrix_file_json(r.choi_true->op());
  if (r.trace_distance) out["trace_distance"] = real_json(*r.trace_distance);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qprobe::cli
