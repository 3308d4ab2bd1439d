#include "ainf/report.hpp"

#include <sstream>

namespace ainf {

void Report::absorb(const Report& other, const std::string& prefix) {
  instances += other.instances;
  for (const auto& v : other.violations)
    violations.push_back({prefix.empty() ? v.clause : prefix + ":" + v.clause, v.location, v.detail});
  for (const auto& n : other.notes) notes.push_back(prefix.empty() ? n : prefix + ": " + n);
}

Json Report::to_json() const {
  Json out;
  out["check"] = check;
  out["status"] = passed() ? "PASS" : "FAIL";
  out["instances"] = instances;
  out["notes"] = notes;
  out["data"] = data;
  Json vs = Json::array();
  for (const auto& v : violations) vs.push_back({{"clause", v.clause}, {"location", v.location}, {"detail", v.detail}});
  out["violations"] = std::move(vs);
  return out;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << check << ": " << (passed() ? "PASS" : "FAIL") << " (" << instances << " instances";
  if (!passed()) os << ", " << violations.size() << " violation" << (violations.size() == 1 ? "" : "s");
  os << ")";
  if (!passed()) {
    const auto& v = violations.front();
    os << "\n  first counterexample [" << v.clause << "] at " << v.location.dump() << ": " << v.detail;
  }
  return os.str();
}

}  // namespace ainf
