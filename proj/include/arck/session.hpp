#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arck/ideal.hpp"
#include "arck/polyring.hpp"
#include "arck/textio.hpp"

namespace arck::session {

struct RingDecl {
  std::string name;
  SourcePos pos;
  std::string order_name;  // as written: lex, grevlex or wgrevlex
  RingPtr ring;
};

struct IdealDecl {
  std::string name;
  std::string ring;
  SourcePos pos;
  Ideal ideal;
};

struct TaskParam {
  std::string key;
  std::string value;
  SourcePos pos;
};

struct TaskDecl {
  std::string kind;
  std::string name;
  SourcePos pos;
  std::vector<TaskParam> params;

  const TaskParam* find(std::string_view key) const;
};

// Rings, ideals and an ordered task list, fully resolved: every name a task
// or ideal mentions is declared, and every polynomial has been parsed.
struct Session {
  std::vector<RingDecl> rings;
  std::vector<IdealDecl> ideals;
  std::vector<TaskDecl> tasks;

  const RingDecl* ring(std::string_view name) const;
  const IdealDecl* ideal(std::string_view name) const;
};

bool operator==(const Session& a, const Session& b);

struct ParseOptions {
  int degree_cap = kDefaultDegreeCap;
};

// Throws ParseError with the line and column of the offending token.
Session parse_session(std::string_view text, const ParseOptions& options = {});
// Canonical text; parse_session(print_session(s)) == s.
std::string print_session(const Session& s);

enum class TaskStatus { Pass, ExpectationFailed, ContractError, ResourceCap };

const char* to_string(TaskStatus s);

struct TaskReport {
  std::string name;
  std::string kind;
  std::vector<std::pair<std::string, std::string>> inputs;
  // Ordered key/value verdict rendered as compact JSON values.
  std::vector<std::pair<std::string, std::string>> verdict;
  std::vector<std::string> witnesses;
  TaskStatus status = TaskStatus::Pass;
  std::string message;
  double millis = 0;
};

struct RunOptions {
  std::optional<std::string> task_filter;  // task name or kind
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

struct RunResult {
  std::vector<TaskReport> tasks;
  // 0 pass, 1 expectation failure, 2 contract error, 3 resource cap.
  int exit_code = 0;

  std::string render_text() const;
  // One JSON object per task, one per line.
  std::string render_json() const;
};

RunResult run(const Session& s, const RunOptions& options = {});


}  // namespace arck::session
