#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arck/arck.h"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int report_parse_failure(const std::string& path) {
  if (arck_last_error_line() > 0)
    std::cerr << path << ":" << arck_last_error() << "\n";
  else
    std::cerr << path << ": " << arck_last_error() << "\n";
  return ARCK_CONTRACT_ERROR;
}

arck_session* load(const std::string& path, int degree_cap, int& status) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "arck: cannot read " << path << "\n";
    status = ARCK_CONTRACT_ERROR;
    return nullptr;
  }
  arck_parse_options opts{degree_cap};
  arck_session* s = nullptr;
  if (arck_session_parse(text.data(), text.size(), &opts, &s) != ARCK_OK) {
    status = report_parse_failure(path);
    return nullptr;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin-Rees computations over polynomial quotient rings"};
  app.set_version_flag("--version", std::string(arck_version()));
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::string task;
  int degree_cap = 0;
  unsigned threads = 1;
  std::uint64_t seed = 0;

  CLI::App* run = app.add_subcommand("run", "Run the tasks of a session file");
  run->add_option("FILE", file, "Session file")->required();
  run->add_flag("--json", json, "Emit one JSON object per task");
  run->add_option("--task", task, "Run only the task with this name or kind");
  run->add_option("--deg-cap", degree_cap, "Total-degree cap for Groebner computations")->check(CLI::PositiveNumber);
  run->add_option("--threads", threads, "Worker threads for ar grids")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Seed for reduction-element searches");

  CLI::App* print = app.add_subcommand("print", "Print a session file in canonical form");
  print->add_option("FILE", file, "Session file")->required();
  print->add_option("--deg-cap", degree_cap, "Total-degree cap")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ARCK_CONTRACT_ERROR;
  }

  int status = 0;
  arck_session* session = load(file, degree_cap, status);
  if (!session) return status;

  if (print->parsed()) {
    char* text = nullptr;
    if (arck_session_print(session, &text) != ARCK_OK) {
      std::cerr << "arck: " << arck_last_error() << "\n";
      arck_session_free(session);
      return ARCK_INTERNAL;
    }
    std::fputs(text, stdout);
    arck_string_free(text);
    arck_session_free(session);
    return 0;
  }

  arck_run_options opts{json ? 1 : 0, task.empty() ? nullptr : task.c_str(), threads, seed};
  arck_report* report = nullptr;
  arck_status rc = arck_session_run(session, &opts, &report);
  arck_session_free(session);
  if (rc != ARCK_OK) {
    std::cerr << "arck: " << arck_last_error() << "\n";
    return rc;
  }
  std::fputs(arck_report_text(report), stdout);
  int code = arck_report_exit_code(report);
  arck_report_free(report);
  return code;
}
