#include "tgwa/cli/report.hpp"

#include <sstream>

namespace tgwa::cli {

using nlohmann::ordered_json;

Status RunReport::status() const {
  if (error) return Status::fail;
  Status s = Status::pass;
  for (const auto& c : checks) {
    Status k = c.status();
    if (k == Status::fail) return Status::fail;
    if (k == Status::unverifiable) s = Status::unverifiable;
  }
  return s;
}

ordered_json to_json(const CheckReport& r) {
  ordered_json items = ordered_json::array();
  for (const auto& it : r.items) {
    ordered_json j{{"name", it.name}, {"status", status_name(it.status)}, {"indices", it.indices}};
    if (!it.detail.empty()) j["detail"] = it.detail;
    if (it.status != Status::pass) {
      j["lhs"] = it.lhs;
      j["rhs"] = it.rhs;
    }
    items.push_back(std::move(j));
  }
  return {{"title", r.title}, {"status", status_name(r.status())}, {"items", std::move(items)}};
}

ordered_json to_json(const RunReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  ordered_json j{{"schema_version", schema_version},
                 {"command", r.command},
                 {"status", status_name(r.status())},
                 {"checks", std::move(checks)},
                 {"results", r.results}};
  if (r.error) j["error"] = *r.error;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

namespace {

void render_value(std::ostream& out, const ordered_json& v, const std::string& indent) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        out << indent << k << ":\n";
        render_value(out, x, indent + "  ");
      } else {
        out << indent << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        out << indent << "-\n";
        render_value(out, x, indent + "  ");
      } else {
        out << indent << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else {
    out << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

}  // namespace

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << "tgwa " << join(r.command) << "\n";
  out << "status: " << status_name(r.status()) << "\n";
  if (r.error) out << "error: " << *r.error << "\n";
  for (const auto& c : r.checks) {
    out << "\n[" << status_name(c.status()) << "] " << c.title << " (" << c.items.size() << " items)\n";
    for (const auto& it : c.items) {
      out << "  " << status_name(it.status) << "  " << it.name;
      if (!it.indices.empty()) {
        out << " [";
        for (std::size_t k = 0; k < it.indices.size(); ++k) out << (k ? "," : "") << it.indices[k];
        out << "]";
      }
      if (!it.detail.empty()) out << "  (" << it.detail << ")";
      out << "\n";
      if (it.status != Status::pass) {
        out << "      lhs: " << it.lhs << "\n";
        out << "      rhs: " << it.rhs << "\n";
      }
    }
  }
  if (!r.results.empty()) {
    out << "\nresults:\n";
    render_value(out, r.results, "  ");
  }
  if (r.elapsed_ms) out << "\nelapsed_ms: " << *r.elapsed_ms << "\n";
  return out.str();
}

}  // namespace tgwa::cli
