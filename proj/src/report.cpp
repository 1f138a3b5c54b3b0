#include "twg/report.hpp"

#include <sstream>

namespace twg {

ordered_json VerificationReport::to_json() const {
  ordered_json j;
  j["artifact"] = "twgraph";
  j["q"] = q;
  j["p"] = p;
  j["m"] = m;
  j["metadata"] = metadata;
  ordered_json arr = ordered_json::array();
  for (const CheckRecord& c : checks) {
    ordered_json rec;
    rec["name"] = c.name;
    rec["status"] = c.pass ? "pass" : "fail";
    rec["witness"] = c.witness;
    arr.push_back(rec);
  }
  j["checks"] = arr;
  j["status"] = pass() ? "pass" : "fail";
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "q = " << q << " (p = " << p << ", m = " << m << ")\n";
  for (const CheckRecord& c : checks) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    os << "  [" << c.elapsed_s << " s]";
    if (!c.pass) os << "  " << c.witness.dump();
    os << "\n";
  }
  os << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace twg
