#include "blochgeom/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "blochgeom/errors.hpp"

namespace blochgeom::io {

namespace {

json real_array(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

int read_dim(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw DomainError("expected an object with integer field \"dim\"");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw DomainError("\"dim\" must be positive");
  return dim;
}

Eigen::MatrixXd read_real_rows(const json& j, const char* key, int dim) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != static_cast<std::size_t>(dim)) {
    throw DomainError(std::string("field \"") + key + "\" must be an array of " +
                      std::to_string(dim) + " rows");
  }
  Eigen::MatrixXd out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[key][static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw DomainError(std::string("row ") + std::to_string(r) + " of \"" + key + "\" must have " +
                        std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const json& x = row[static_cast<std::size_t>(c)];
      if (!x.is_number()) throw DomainError(std::string("non-numeric entry in \"") + key + "\"");
      out(r, c) = x.get<double>();
    }
  }
  return out;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
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
  return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

HermitianMatrix matrix_from_json(const json& j) {
  const int dim = read_dim(j);
  const Eigen::MatrixXd re = read_real_rows(j, "re", dim);
  const Eigen::MatrixXd im =
      j.contains("im") ? read_real_rows(j, "im", dim) : Eigen::MatrixXd::Zero(dim, dim);
  ComplexMatrix m(dim, dim);
  m.real() = re;
  m.imag() = im;
  return HermitianMatrix(m);
}

json bloch_to_json(const BlochVector& v) {
  return json{{"dim", v.dim()}, {"coords", real_array(v.coords())}};
}

BlochVector bloch_from_json(const json& j) {
  const int dim = read_dim(j);
  if (!j.contains("coords") || !j["coords"].is_array()) {
    throw DomainError("Bloch vector needs an array field \"coords\"");
  }
  const json& c = j["coords"];
  RealVector v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_number()) throw DomainError("non-numeric Bloch coordinate");
    v(static_cast<Eigen::Index>(i)) = c[i].get<double>();
  }
  return BlochVector(dim, std::move(v));
}

json to_json(const StateClass& c) {
  const char* kind = "POSITIVE_INTERIOR";
  if (c.kind() == StateClass::Kind::Boundary) kind = "BOUNDARY";
  if (c.kind() == StateClass::Kind::Nonpositive) kind = "NONPOSITIVE";
  return json{{"kind", kind}, {"p", c.zero_count()}, {"label", c.to_string()}};
}

json to_json(const StratumReport& r) {
  return json{{"dim", r.dim},           {"p", r.p},
              {"distance", r.distance}, {"radius_p", r.radius_p},
              {"on_sphere", r.on_sphere}, {"satisfied", r.satisfied},
              {"slack", r.slack()}};
}

json to_json(const DirectionReport& r) {
  return json{{"dim", r.cap_state.dim()},
              {"n", real_array(r.n)},
              {"mu", real_array(r.mu)},
              {"max_length", r.max_length},
              {"cap_state", matrix_to_json(r.cap_state.matrix())},
              {"cap_spectrum", real_array(r.cap_spectrum.values)},
              {"cap_state_class", to_json(r.cap_state_class)},
              {"cap_zero_count", r.cap_zero_count}};
}

json to_json(const AntipodeReport& r) {
  return json{{"dim", r.dim},
              {"q", r.q},
              {"direction_state", matrix_to_json(r.direction_state.matrix())},
              {"max_antipodal_length", r.max_antipodal_length},
              {"antipodal_cap", matrix_to_json(r.antipodal_cap.matrix())},
              {"spectral_deviation", r.spectral_deviation},
              {"matches_R_p", r.matches_R_p}};
}

json to_json(const LemmaResult& r) {
  return json{{"A", r.sum_of_squares}, {"bound", r.bound}, {"slack", r.slack}, {"equality", r.equality}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::string stratum_csv_row(const StratumReport& r) {
  return csv_row({std::to_string(r.dim), std::to_string(r.p), format_real(r.distance),
                  format_real(r.radius_p), format_bool(r.on_sphere), format_bool(r.satisfied)});
}

}  // namespace blochgeom::io
