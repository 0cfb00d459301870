#include "arck/arck.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "arck/error.hpp"
#include "arck/session.hpp"

struct arck_session {
  arck::session::Session session;
};

struct arck_report {
  arck::session::RunResult result;
  std::string text;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

void clear_error() {
  last_error.clear();
  last_line = last_column = 0;
}

arck_status fail(arck_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
arck_status guarded(F&& body) {
  clear_error();
  try {
    return body();
  } catch (const arck::ParseError& e) {
    last_line = e.line();
    last_column = e.column();
    return fail(ARCK_CONTRACT_ERROR, e.what());
  } catch (const arck::ResourceError& e) {
    return fail(ARCK_RESOURCE_CAP, e.what());
  } catch (const arck::InternalError& e) {
    return fail(ARCK_INTERNAL, e.what());
  } catch (const arck::Error& e) {
    return fail(ARCK_CONTRACT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARCK_RESOURCE_CAP, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARCK_INTERNAL, e.what());
  }
}

arck_status from_task(arck::session::TaskStatus s) {
  using arck::session::TaskStatus;
  switch (s) {
    case TaskStatus::Pass: return ARCK_OK;
    case TaskStatus::ExpectationFailed: return ARCK_EXPECTATION_FAILED;
    case TaskStatus::ContractError: return ARCK_CONTRACT_ERROR;
    case TaskStatus::ResourceCap: return ARCK_RESOURCE_CAP;
  }
  return ARCK_INTERNAL;
}

}  // namespace

extern "C" {

ARCK_API const char* arck_version(void) { return "0.1.0"; }

ARCK_API const char* arck_last_error(void) { return last_error.c_str(); }
ARCK_API size_t arck_last_error_line(void) { return last_line; }
ARCK_API size_t arck_last_error_column(void) { return last_column; }

ARCK_API arck_status arck_session_parse(const char* text, size_t length, const arck_parse_options* options,
                                        arck_session** out) {
  if (!out || (!text && length)) return fail(ARCK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    arck::session::ParseOptions opts;
    if (options && options->degree_cap > 0) opts.degree_cap = options->degree_cap;
    auto s = arck::session::parse_session(std::string_view(text ? text : "", length), opts);
    *out = new arck_session{std::move(s)};
    return ARCK_OK;
  });
}

ARCK_API void arck_session_free(arck_session* session) { delete session; }

ARCK_API size_t arck_session_task_count(const arck_session* session) {
  return session ? session->session.tasks.size() : 0;
}

ARCK_API arck_status arck_session_print(const arck_session* session, char** out) {
  if (!session || !out) return fail(ARCK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string text = arck::session::print_session(session->session);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return ARCK_OK;
  });
}

ARCK_API void arck_string_free(char* s) { std::free(s); }

ARCK_API arck_status arck_session_run(const arck_session* session, const arck_run_options* options,
                                      arck_report** out) {
  if (!session || !out) return fail(ARCK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    arck::session::RunOptions opts;
    bool json = false;
    if (options) {
      json = options->json != 0;
      if (options->task_filter) opts.task_filter = std::string(options->task_filter);
      opts.threads = options->threads;
      opts.seed = options->seed;
    }
    auto* report = new arck_report{arck::session::run(session->session, opts), {}};
    report->text = json ? report->result.render_json() : report->result.render_text();
    *out = report;
    return ARCK_OK;
  });
}

ARCK_API const char* arck_report_text(const arck_report* report) { return report ? report->text.c_str() : ""; }

ARCK_API int arck_report_exit_code(const arck_report* report) {
  return report ? report->result.exit_code : ARCK_INVALID_ARGUMENT;
}

ARCK_API size_t arck_report_task_count(const arck_report* report) {
  return report ? report->result.tasks.size() : 0;
}

ARCK_API arck_status arck_report_task_status(const arck_report* report, size_t index) {
  if (!report || index >= report->result.tasks.size()) return fail(ARCK_INVALID_ARGUMENT, "task index out of range");
  return from_task(report->result.tasks[index].status);
}

ARCK_API void arck_report_free(arck_report* report) { delete report; }

}
