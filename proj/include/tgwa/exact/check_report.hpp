#pragma once

#include <string>
#include <vector>

namespace tgwa {

enum class Status { pass, fail, unverifiable };

const char* status_name(Status s);

struct CheckItem {
  std::string name;
  Status status = Status::pass;
  std::vector<int> indices;  // 1-based, as reported to users
  std::string detail;
  std::string lhs;  // both sides are filled on failure
  std::string rhs;
};

struct CheckReport {
  std::string title;
  std::vector<CheckItem> items;

  void add(CheckItem item) { items.push_back(std::move(item)); }
  void merge(const CheckReport& other);
  // pass iff every item passes; any unverifiable item makes the report unverifiable.
  Status status() const;
  bool passed() const { return status() == Status::pass; }
  const CheckItem* first_failure() const;
  std::string summary() const;
};

// Convenience for exact identity checks.
CheckItem identity_item(std::string name, std::vector<int> indices, const std::string& lhs,
                        const std::string& rhs, bool equal);

}  // namespace tgwa
