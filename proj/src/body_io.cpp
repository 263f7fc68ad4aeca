#include "hilbcover/body_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace hilbcover {

using json = nlohmann::ordered_json;

namespace {

ConvexBody body_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    fail(ErrorCode::ParseError, "body JSON needs 'dim' and 'vertices'");
  int dim = j.at("dim").get<int>();
  if (dim < 1 || dim > 3) fail(ErrorCode::ValidationError, "dim must be 1, 2 or 3");
  std::vector<Vec> pts;
  for (const auto& row : j.at("vertices")) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(ErrorCode::ParseError, "vertex row arity does not match dim");
    Vec p = Vec::Zero();
    for (int k = 0; k < dim; ++k) p[k] = row.at(k).get<double>();
    pts.push_back(p);
  }
  std::string name = j.value("name", std::string());
  return ConvexBody::from_vertices(dim, pts, name, /*normalize=*/true);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) fail(ErrorCode::ParseError, "trailing characters in number: " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(ErrorCode::ParseError, "not a number: " + s);
  }
}

long parse_long(const std::string& s) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) fail(ErrorCode::ParseError, "trailing characters in integer: " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(ErrorCode::ParseError, "not an integer: " + s);
  }
}

}  // namespace

ConvexBody parse_body_spec(const std::string& text, int dim_hint) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) fail(ErrorCode::ParseError, "empty body spec");
  if (s.front() == '{') {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON body");
    return body_from_json(j);
  }
  auto head = s.substr(0, s.find(':'));
  std::string args = s.find(':') == std::string::npos ? "" : s.substr(s.find(':') + 1);
  if (head == "cube") return make_cube(dim_hint);
  if (head == "cross") return make_cross(dim_hint);
  if (head == "simplex") return make_simplex(dim_hint);
  if (head == "ngon") {
    if (args.empty()) fail(ErrorCode::ParseError, "ngon:k needs k");
    return make_ngon(static_cast<int>(parse_long(args)));
  }
  if (head == "interval") {
    auto parts = split(args, ',');
    if (parts.size() != 2) fail(ErrorCode::ParseError, "interval:a,b needs two endpoints");
    return make_interval(parse_double(parts[0]), parse_double(parts[1]));
  }
  if (head == "random_hull") {
    auto parts = split(args, ',');
    if (parts.empty()) fail(ErrorCode::ParseError, "random_hull:n,seed=s needs arguments");
    long n = parse_long(parts[0]);
    std::uint64_t seed = 0;
    if (parts.size() > 1) {
      std::string sd = parts[1];
      if (sd.rfind("seed=", 0) == 0) sd = sd.substr(5);
      seed = static_cast<std::uint64_t>(parse_long(sd));
    }
    return make_random_hull(dim_hint, static_cast<int>(n), seed);
  }
  fail(ErrorCode::ParseError, "unknown body spec: " + s);
}

std::string body_to_json(const ConvexBody& body) {
  json j;
  j["dim"] = body.dim();
  json verts = json::array();
  for (const Vec& v : body.vertices()) {
    json row = json::array();
    for (int k = 0; k < body.dim(); ++k) row.push_back(v[k]);
    verts.push_back(row);
  }
  j["vertices"] = verts;
  if (!body.name().empty()) j["name"] = body.name();
  j["scale_factor"] = body.scale_factor();
  j["contains_origin_interior"] = body.contains_origin_interior();
  j["centrally_symmetric"] = body.centrally_symmetric();
  j["volume"] = body.volume();
  j["boundary_measure"] = body.boundary_measure();
  return j.dump(2);
}

namespace {

const char* method_name(MeasureMethod m) {
  switch (m) {
    case MeasureMethod::Exact: return "exact";
    case MeasureMethod::Quadrature: return "quadrature";
    case MeasureMethod::MonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

const char* geometry_name(GeometryTag t) {
  switch (t) {
    case GeometryTag::Funk: return "funk";
    case GeometryTag::Hilbert: return "hilbert";
    case GeometryTag::Minkowski: return "minkowski";
  }
  return "unknown";
}

}  // namespace

std::string measure_to_json(const MeasureEstimate& m) {
  json j;
  j["value"] = m.value;
  j["std_error"] = m.std_error;
  j["n_samples"] = m.n_samples;
  j["method"] = method_name(m.method);
  j["geometry"] = geometry_name(m.geometry);
  j["seed"] = m.seed;
  return j.dump(2);
}

std::string net_to_json(const Net& net) {
  json j;
  j["alpha"] = net.alpha;
  j["metric"] = geometry_name(net.metric_tag);
  j["separated"] = net.separated;
  j["size"] = net.centers.size();
  j["ground_size"] = net.ground_size;
  json centers = json::array();
  for (const Vec& c : net.centers) centers.push_back({c.x(), c.y(), c.z()});
  j["centers"] = centers;
  return j.dump(2);
}

std::string cover_to_json(const CoverEstimate& est) {
  json j;
  j["alpha"] = est.alpha;
  j["target"] = est.target == TargetKind::Body ? "body" : "boundary";
  j["upper"] = est.upper;
  j["lower"] = est.lower;
  j["clamped"] = est.clamped;
  j["exact"] = est.exact;
  return j.dump(2);
}

}  // namespace hilbcover
