#include "sympl4/serialization.hpp"

#include <cstdio>

namespace sympl4 {

namespace {

Json mat2_to_json(const Mat2& m) {
  return Json::array({m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
}

Mat2 mat2_from_json(const Json& j, const char* field) {
  if (!j.is_array() || j.size() != 4) {
    throw SymplError(ErrorCode::ParseError,
                     std::string("field '") + field + "' must be an array of 4 numbers");
  }
  Mat2 m;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_number()) {
      throw SymplError(ErrorCode::ParseError,
                       std::string("field '") + field + "' must contain numbers");
    }
    m(i / 2, i % 2) = j[i].get<double>();
  }
  return m;
}

Json mat4_to_json(const Mat4& m) {
  Json arr = Json::array();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) arr.push_back(m(r, c));
  return arr;
}

Mat4 mat4_from_json(const Json& j, const char* field) {
  if (!j.is_array() || j.size() != 16) {
    throw SymplError(ErrorCode::ParseError,
                     std::string("field '") + field + "' must be an array of 16 numbers");
  }
  Mat4 m;
  for (int i = 0; i < 16; ++i) {
    if (!j[i].is_number()) {
      throw SymplError(ErrorCode::ParseError,
                       std::string("field '") + field + "' must contain numbers");
    }
    m(i / 4, i % 4) = j[i].get<double>();
  }
  return m;
}

const Json& require_field(const Json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) {
    throw SymplError(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  }
  return *it;
}

}  // namespace

Json to_json(const LieAlgebraElement& l) {
  return Json{{"a", mat2_to_json(l.a())}, {"b", mat2_to_json(l.b())}, {"c", mat2_to_json(l.c())}};
}

LieAlgebraElement lie_from_json(const Json& j) {
  if (!j.is_object()) {
    throw SymplError(ErrorCode::ParseError, "algebra element must be a JSON object");
  }
  return LieAlgebraElement(mat2_from_json(require_field(j, "a"), "a"),
                           mat2_from_json(require_field(j, "b"), "b"),
                           mat2_from_json(require_field(j, "c"), "c"));
}

Json to_json(const SymplecticMatrix& m) {
  return Json{{"ordering", ordering_name(m.ordering())}, {"entries", mat4_to_json(m.entries())}};
}

SymplecticMatrix matrix_from_json(const Json& j, double tol) {
  if (!j.is_object()) {
    throw SymplError(ErrorCode::ParseError, "matrix must be a JSON object");
  }
  const Json& ord = require_field(j, "ordering");
  if (!ord.is_string() || (ord != "Y" && ord != "X")) {
    throw SymplError(ErrorCode::ParseError, "field 'ordering' must be \"Y\" or \"X\"");
  }
  const Ordering ordering = ord == "Y" ? Ordering::Y : Ordering::X;
  return SymplecticMatrix(mat4_from_json(require_field(j, "entries"), "entries"), ordering, tol);
}

Json to_json(const CovarianceMatrix& v) {
  return Json{{"entries", mat4_to_json(v.entries())},
              {"l", Json::array({v.config().l1, v.config().l2})},
              {"hbar", v.config().hbar}};
}

CovarianceMatrix covariance_from_json(const Json& j, double tol) {
  if (!j.is_object()) {
    throw SymplError(ErrorCode::ParseError, "covariance must be a JSON object");
  }
  const Json& l = require_field(j, "l");
  if (!l.is_array() || l.size() != 2) {
    throw SymplError(ErrorCode::ParseError, "field 'l' must be [l1, l2]");
  }
  OscillatorConfig config;
  config.l1 = l[0].get<double>();
  config.l2 = l[1].get<double>();
  config.hbar = require_field(j, "hbar").get<double>();
  return CovarianceMatrix(mat4_from_json(require_field(j, "entries"), "entries"), config, tol);
}

Json to_json(const PolymerState& state) {
  Json points = Json::array();
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < state.size(); ++i) {
    points.push_back(Json::array({state.points()[i].x1, state.points()[i].x2}));
    coeffs.push_back(Json::array({state.coeffs()[i].real(), state.coeffs()[i].imag()}));
  }
  Json j{{"points", points}, {"coeffs", coeffs}};
  if (state.mu()) {
    j["mu"] = Json::array({(*state.mu())[0], (*state.mu())[1]});
  }
  return j;
}

PolymerState polymer_from_json(const Json& j) {
  if (!j.is_object()) {
    throw SymplError(ErrorCode::ParseError, "polymer state must be a JSON object");
  }
  const Json& points_json = require_field(j, "points");
  const Json& coeffs_json = require_field(j, "coeffs");
  if (!points_json.is_array() || !coeffs_json.is_array() ||
      points_json.size() != coeffs_json.size()) {
    throw SymplError(ErrorCode::ParseError,
                     "'points' and 'coeffs' must be arrays of equal length");
  }
  std::vector<PolymerState::Point> points;
  std::vector<Complex> coeffs;
  for (std::size_t i = 0; i < points_json.size(); ++i) {
    const Json& p = points_json[i];
    const Json& c = coeffs_json[i];
    if (!p.is_array() || p.size() != 2 || !c.is_array() || c.size() != 2) {
      throw SymplError(ErrorCode::ParseError, "points and coeffs must be pairs of numbers");
    }
    points.push_back({p[0].get<double>(), p[1].get<double>()});
    coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
  }
  std::optional<std::array<double, 2>> mu;
  if (j.contains("mu")) {
    const Json& m = j["mu"];
    if (!m.is_array() || m.size() != 2) {
      throw SymplError(ErrorCode::ParseError, "'mu' must be [mu1, mu2]");
    }
    mu = std::array<double, 2>{m[0].get<double>(), m[1].get<double>()};
  }
  return PolymerState(std::move(points), std::move(coeffs), mu);
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw SymplError(ErrorCode::ParseError, "invalid JSON");
  }
  return j;
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& samples) {
  out << "t,q1,p1,q2,p2,q1p,p1p,q2p,p2p\n";
  char buf[32];
  const auto emit = [&](double value, char sep) {
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    out << buf << sep;
  };
  for (const TrajectorySample& s : samples) {
    emit(s.input.t, ',');
    emit(s.input.q1, ',');
    emit(s.input.p1, ',');
    emit(s.input.q2, ',');
    emit(s.input.p2, ',');
    emit(s.transformed.q1, ',');
    emit(s.transformed.p1, ',');
    emit(s.transformed.q2, ',');
    emit(s.transformed.p2, '\n');
  }
}

}  // namespace sympl4
