#include "kcn/io.hpp"

#include <fstream>
#include <sstream>

namespace kcn {

namespace {

Json point_json(const Point& p) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p[i]);
  return arr;
}

double number(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw InputError(std::string("expected numeric field \"") + key + "\"");
  return j.at(key).get<double>();
}

Point point_from(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InputError(std::string(what) + " must be a non-empty array");
  Point p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError(std::string(what) + " must contain numbers");
    p[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return p;
}

Point field_point(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return point_from(j.at(key), key);
}

Json object_json(const Object& obj) {
  return std::visit(
      [](const auto& o) -> Json {
        using T = std::decay_t<decltype(o)>;
        Json j;
        if constexpr (std::is_same_v<T, Ball>) {
          j["type"] = o.center.size() == 2 ? "disk" : "ball";
          j["center"] = point_json(o.center);
          j["radius"] = o.radius;
        } else if constexpr (std::is_same_v<T, Segment>) {
          j["type"] = "segment";
          j["p"] = point_json(o.p);
          j["q"] = point_json(o.q);
        } else {
          j["type"] = "interval";
          j["lo"] = o.lo;
          j["hi"] = o.hi;
        }
        return j;
      },
      obj);
}

Object object_from(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw InputError("every object needs a string \"type\"");
  const auto type = j.at("type").get<std::string>();
  if (type == "disk" || type == "ball") {
    Ball b{field_point(j, "center"), number(j, "radius")};
    if (type == "disk" && b.center.size() != 2) throw InputError("a disk center has two coordinates");
    return b;
  }
  if (type == "segment") return Segment{field_point(j, "p"), field_point(j, "q")};
  if (type == "interval") return Interval{number(j, "lo"), number(j, "hi")};
  throw InputError("unknown object type \"" + type + "\"");
}

}  // namespace

Json to_json(const Instance& inst) {
  Json j;
  j["dimension"] = inst.dimension;
  j["k"] = inst.k;
  j["objects"] = Json::array();
  for (const auto& obj : inst.objects) j["objects"].push_back(object_json(obj));
  return j;
}

Json to_json(const Solution& sol) {
  Json j;
  j["centers"] = Json::array();
  for (const auto& c : sol.centers) j["centers"].push_back(point_json(c));
  j["radius"] = sol.radius;
  j["algorithm"] = sol.algorithm;
  j["decider_calls"] = sol.decider_calls;
  return j;
}

Json to_json(const CandidateSets& sets) {
  Json j;
  j["points"] = Json::array();
  for (const auto& c : sets.points) {
    Json p;
    p["point"] = point_json(c.point);
    p["provenance"] = to_string(c.provenance);
    p["first"] = c.first;
    p["second"] = c.second;
    p["distance"] = c.distance;
    j["points"].push_back(std::move(p));
  }
  j["radii"] = sets.radii;
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  Instance inst;
  if (!j.contains("objects") || !j.at("objects").is_array())
    throw InputError("instance needs an \"objects\" array");
  for (const auto& o : j.at("objects")) inst.objects.push_back(object_from(o));
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer()) throw InputError("\"k\" must be an integer");
    inst.k = j.at("k").get<int>();
  }
  if (j.contains("dimension")) {
    if (!j.at("dimension").is_number_integer()) throw InputError("\"dimension\" must be an integer");
    inst.dimension = j.at("dimension").get<Eigen::Index>();
  } else if (!inst.objects.empty()) {
    inst.dimension = dimension(inst.objects.front());
  }
  validate(inst);
  return inst;
}

Solution solution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("centers") || !j.at("centers").is_array())
    throw InputError("solution needs a \"centers\" array");
  Solution sol;
  for (const auto& c : j.at("centers")) sol.centers.push_back(point_from(c, "center"));
  sol.radius = number(j, "radius");
  if (j.contains("algorithm")) sol.algorithm = j.at("algorithm").get<std::string>();
  if (j.contains("decider_calls")) sol.decider_calls = j.at("decider_calls").get<std::size_t>();
  return sol;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

}  // namespace kcn
