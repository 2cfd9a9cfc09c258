#include "philucas/jsonl.hpp"

#include <ostream>
#include <sstream>

namespace philucas {

namespace {

std::string real_str(const Real& v) {
  return v.str(25);
}

}  // namespace

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string record_json(const SolutionRecord& rec) {
  const auto& c = rec.candidate;
  std::ostringstream os;
  os << "{\"eq\":\"" << to_string(c.eq) << "\",\"x\":" << c.x
     << ",\"y\":" << c.y << ",\"z\":";
  if (c.z)
    os << *c.z;
  else
    os << "null";
  os << ",\"m\":" << c.m << ",\"n\":" << c.n
     << ",\"trivial\":" << (rec.trivial ? "true" : "false")
     << ",\"family\":\"" << to_string(rec.family) << "\"}";
  return os.str();
}

std::string unresolved_json(const UnresolvedEntry& entry) {
  const auto& c = entry.candidate;
  std::ostringstream os;
  os << "{\"unresolved\":{\"eq\":\"" << to_string(c.eq) << "\",\"x\":" << c.x
     << ",\"y\":" << c.y << ",\"z\":";
  if (c.z)
    os << *c.z;
  else
    os << "null";
  os << ",\"m\":" << c.m << ",\"n\":" << c.n
     << ",\"cofactor\":\"" << entry.cofactor.get_str() << "\"}}";
  return os.str();
}

std::string box_json(const SearchBox& box) {
  std::ostringstream os;
  os << "{\"x_max\":" << box.x_max << ",\"m_max\":" << box.m_max
     << ",\"z_max\":" << box.z_max << ",\"z_le_x_plus_y\":"
     << (box.z_le_x_plus_y ? "true" : "false") << ",\"z_excluded\":[";
  bool first = true;
  for (long long z : box.z_exclusions) {
    if (!first) os << ",";
    os << z;
    first = false;
  }
  os << "],\"mn\":\"" << (box.mn == MnRange::MGreaterThanN ? "m>n" : "all")
     << "\",\"coprime_mn\":" << (box.coprime_mn_only ? "true" : "false")
     << ",\"nu2\":\""
     << (box.nu2 == Nu2Filter::Any
             ? "any"
             : box.nu2 == Nu2Filter::Distinct ? "distinct" : "equal")
     << "\",\"effort\":" << box.effort.rho_iterations
     << ",\"seed\":" << box.effort.seed << "}";
  return os.str();
}

std::string summary_json(const CertificationReport& report) {
  unsigned long long trivial = 0, unexpected = 0;
  for (const auto& rec : report.found) {
    if (rec.trivial) ++trivial;
    if (rec.family == FamilyTag::Unexpected) ++unexpected;
  }
  std::ostringstream os;
  os << "{\"summary\":{\"eq\":\"" << to_string(report.eq) << "\",\"verdict\":\""
     << to_string(report.verdict) << "\",\"candidates\":" << report.candidates
     << ",\"checked\":" << report.checked << ",\"found\":" << report.found.size()
     << ",\"trivial\":" << trivial << ",\"unexpected\":" << unexpected
     << ",\"unresolved\":" << report.unresolved.size()
     << ",\"box\":" << box_json(report.box) << "}}";
  return os.str();
}

std::string bound_json(const BoundReport& report) {
  std::ostringstream os;
  os << "{\"bound\":{\"id\":" << json_quote(report.bound_id)
     << ",\"claim\":" << json_quote(report.claim)
     << ",\"computed\":\"" << real_str(report.computed)
     << "\",\"claimed\":\"" << real_str(report.claimed)
     << "\",\"relation\":\"" << to_string(report.relation)
     << "\",\"margin\":\"" << real_str(report.margin)
     << "\",\"exact\":" << (report.exact ? "true" : "false")
     << ",\"pass\":" << (report.pass ? "true" : "false") << "}}";
  return os.str();
}

std::string scan_hit_json(const ScanHit& hit) {
  std::ostringstream os;
  os << "{\"hit\":{\"x1\":" << hit.x1 << ",\"y1\":" << hit.y1
     << ",\"q\":" << hit.q << ",\"exponent\":" << hit.exponent_reached << "}}";
  return os.str();
}

std::string catalog_json(const CatalogItem& item) {
  std::ostringstream os;
  os << "{\"catalog\":{\"id\":" << json_quote(item.id)
     << ",\"description\":" << json_quote(item.description)
     << ",\"pass\":" << (item.pass ? "true" : "false")
     << ",\"detail\":" << json_quote(item.detail) << "}}";
  return os.str();
}

std::string manifest_json(
    const std::vector<std::pair<std::string, std::string>>& fields) {
  std::ostringstream os;
  os << "{\"manifest\":{";
  bool first = true;
  for (const auto& [k, v] : fields) {
    if (!first) os << ",";
    os << json_quote(k) << ":" << v;
    first = false;
  }
  os << "}}";
  return os.str();
}

void write_report(std::ostream& os, const CertificationReport& report,
                  const std::string& manifest_line) {
  if (!manifest_line.empty()) os << manifest_line << "\n";
  for (const auto& rec : report.found)
    if (rec.family == FamilyTag::Unexpected && !rec.trivial)
      os << record_json(rec) << "\n";
  for (const auto& rec : report.found)
    if (rec.family != FamilyTag::Unexpected || rec.trivial)
      os << record_json(rec) << "\n";
  for (const auto& entry : report.unresolved)
    os << unresolved_json(entry) << "\n";
  os << summary_json(report) << "\n";
}

}  // namespace philucas
