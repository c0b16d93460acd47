#include "tgwa/exact/check_report.hpp"

namespace tgwa {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unverifiable: return "unverifiable";
  }
  return "?";
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& item : other.items) {
    CheckItem copy = item;
    if (!other.title.empty()) copy.name = other.title + ": " + copy.name;
    items.push_back(std::move(copy));
  }
}

Status CheckReport::status() const {
  Status s = Status::pass;
  for (const auto& item : items) {
    if (item.status == Status::fail) return Status::fail;
    if (item.status == Status::unverifiable) s = Status::unverifiable;
  }
  return s;
}

const CheckItem* CheckReport::first_failure() const {
  for (const auto& item : items) {
    if (item.status != Status::pass) return &item;
  }
  return nullptr;
}

std::string CheckReport::summary() const {
  std::size_t ok = 0;
  for (const auto& item : items) ok += item.status == Status::pass;
  std::string out = title.empty() ? std::string("checks") : title;
  out += ": " + std::string(status_name(status())) + " (" + std::to_string(ok) + "/" +
         std::to_string(items.size()) + ")";
  if (const CheckItem* f = first_failure()) {
    out += "; first problem: " + f->name;
    if (!f->detail.empty()) out += " (" + f->detail + ")";
  }
  return out;
}

CheckItem identity_item(std::string name, std::vector<int> indices, const std::string& lhs,
                        const std::string& rhs, bool equal) {
  CheckItem item;
  item.name = std::move(name);
  item.indices = std::move(indices);
  item.status = equal ? Status::pass : Status::fail;
  if (!equal) {
    item.lhs = lhs;
    item.rhs = rhs;
  }
  return item;
}

}  // namespace tgwa
