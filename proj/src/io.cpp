#include "hvbox/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "hvbox/hvimprove.hpp"

namespace hvbox {

using Json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw InputError("'" + std::string(field) + "' is not a decimal number");
  }
  if (!std::isfinite(value)) {
    throw InputError("'" + std::string(field) + "' is not finite");
  }
  return value;
}

std::vector<double> parse_row(std::string_view line) {
  std::vector<double> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    coords.push_back(parse_double(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return coords;
}

Json point_json(const Point& p) { return Json(p.vec()); }

Point point_from_json(const Json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of numbers");
  std::vector<double> coords;
  for (const Json& v : j) {
    if (!v.is_number()) throw InputError(std::string(what) + " must be an array of numbers");
    coords.push_back(v.get<double>());
  }
  try {
    return Point(std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      std::vector<double> coords = parse_row(body);
      if (!points.empty() && coords.size() != points.front().dim()) {
        throw InputError("expected " + std::to_string(points.front().dim()) + " values, got " +
                         std::to_string(coords.size()));
      }
      points.emplace_back(std::move(coords));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return points;
}

std::vector<Point> read_point_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return read_points(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Point parse_point_list(const std::string& text) {
  try {
    return Point(parse_row(text));
  } catch (const InputError& e) {
    throw InputError("invalid point list '" + text + "': " + e.what());
  }
}

std::string format_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string serialize_decomposition(const Decomposition& decomp) {
  const DecomposeConfig& config = decomp.config();
  Json meta;
  meta["alpha"] = config.alpha;
  meta["mode"] = std::string(to_string(config.mode()));
  if (config.reference) meta["reference"] = point_json(*config.reference);
  if (config.ideal) meta["ideal"] = point_json(*config.ideal);
  meta["M"] = decomp.dim();
  meta["N"] = decomp.front().size();

  Json front = Json::array();
  for (const Point& p : decomp.front().points()) front.push_back(point_json(p));

  Json boxes = Json::array();
  for (const HyperRectangle& box : decomp.boxes()) {
    Json b;
    b["lower"] = point_json(box.lower());
    b["upper"] = point_json(box.upper());
    boxes.push_back(std::move(b));
  }

  const Diagnostics& d = decomp.diagnostics();
  Json diag;
  diag["iterations"] = d.iterations;
  diag["accepted"] = d.accepted;
  diag["pruned_dominated"] = d.pruned_dominated;
  diag["pruned_resolution"] = d.pruned_resolution;
  diag["pruned_volume"] = d.pruned_volume;
  diag["splits"] = d.splits;
  diag["max_depth"] = d.max_depth;

  Json doc;
  doc["meta"] = std::move(meta);
  doc["front"] = std::move(front);
  doc["h_all"] = decomp.h_all();
  doc["h_tol"] = decomp.h_tol();
  doc["nondominated_volume"] = nondominated_volume(decomp);
  doc["boxes"] = std::move(boxes);
  doc["diagnostics"] = std::move(diag);
  return doc.dump(2) + "\n";
}

Decomposition parse_decomposition(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed decomposition document: ") + e.what());
  }
  try {
    const Json& meta = doc.at("meta");
    DecomposeConfig config;
    config.alpha = meta.at("alpha").get<double>();
    if (meta.contains("reference")) config.reference = point_from_json(meta["reference"], "meta.reference");
    if (meta.contains("ideal")) config.ideal = point_from_json(meta["ideal"], "meta.ideal");
    if (meta.at("mode").get<std::string>() != to_string(config.mode())) {
      throw InputError("meta.mode disagrees with the presence of meta.reference");
    }

    std::vector<Point> points;
    for (const Json& p : doc.at("front")) points.push_back(point_from_json(p, "front point"));
    ParetoFront front(std::move(points));
    if (meta.at("M").get<std::size_t>() != front.dim() ||
        meta.at("N").get<std::size_t>() != front.size()) {
      throw InputError("meta.M / meta.N disagree with the front");
    }
    config.validate(front);

    const Grids grids = effective_grids(front, config);
    std::vector<double> lower;
    std::vector<double> upper;
    for (const auto& grid : grids) {
      lower.push_back(grid.front());
      upper.push_back(grid.back());
    }
    HyperRectangle bounds(Point(std::move(lower)), Point(std::move(upper)));

    const double h_all = doc.at("h_all").get<double>();
    const double h_tol = doc.at("h_tol").get<double>();
    if (h_all != box_volume(bounds)) {
      throw InputError("h_all disagrees with the front and config");
    }

    std::vector<HyperRectangle> boxes;
    for (const Json& b : doc.at("boxes")) {
      boxes.emplace_back(point_from_json(b.at("lower"), "box lower"),
                         point_from_json(b.at("upper"), "box upper"));
    }

    const Json& dj = doc.at("diagnostics");
    Diagnostics diag;
    diag.iterations = dj.at("iterations").get<std::uint64_t>();
    diag.accepted = dj.at("accepted").get<std::uint64_t>();
    diag.pruned_dominated = dj.at("pruned_dominated").get<std::uint64_t>();
    diag.pruned_resolution = dj.at("pruned_resolution").get<std::uint64_t>();
    diag.pruned_volume = dj.at("pruned_volume").get<std::uint64_t>();
    diag.splits = dj.at("splits").get<std::uint64_t>();
    diag.max_depth = dj.at("max_depth").get<std::uint64_t>();
    if (diag.accepted != boxes.size()) {
      throw InputError("diagnostics.accepted disagrees with the box count");
    }

    return Decomposition(std::move(front), std::move(config), std::move(bounds),
                         std::move(boxes), h_all, h_tol, diag);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid decomposition document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid decomposition document: ") + e.what());
  }
}

Decomposition read_decomposition_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_decomposition(buffer.str());
}

}  // namespace hvbox
