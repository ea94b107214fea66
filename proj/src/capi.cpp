#include "jhilbert/jhilbert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "jhilbert/report.hpp"

struct jh_problem {
  jh::ProblemSpec spec;
};

struct jh_options {
  jh::RunOptions run;
};

namespace {

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

jh_status deliver(const std::string& s, char** out) {
  if (!out) return JH_OK;
  *out = duplicate(s);
  return *out ? JH_OK : JH_ERR_OUT_OF_MEMORY;
}

}  // namespace

extern "C" {

jh_status jh_problem_parse(const char* text, uint32_t char_override, jh_problem** out, char** error) {
  if (error) *error = nullptr;
  if (!text || !out) return JH_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    auto p = std::make_unique<jh_problem>();
    p->spec = jh::parseProblem(text, char_override);
    *out = p.release();
    return JH_OK;
  } catch (const jh::ParseError& e) {
    deliver(e.what(), error);
    return JH_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    return JH_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    deliver(e.what(), error);
    return JH_ERR_FAILURE;
  }
}

void jh_problem_free(jh_problem* problem) { delete problem; }

jh_status jh_problem_print(const jh_problem* problem, char** out) {
  if (!problem || !out) return JH_ERR_INVALID_ARGUMENT;
  try {
    return deliver(jh::printProblem(problem->spec), out);
  } catch (...) {
    return JH_ERR_FAILURE;
  }
}

jh_options* jh_options_new(void) { return new (std::nothrow) jh_options(); }
void jh_options_free(jh_options* options) { delete options; }

void jh_options_set_seed(jh_options* o, uint64_t seed) {
  if (o) o->run.seed = seed;
}
void jh_options_set_nmax(jh_options* o, uint32_t nmax) {
  if (o) o->run.nmax = nmax;
}
jh_status jh_options_set_cap_m(jh_options* o, uint32_t cap_m) {
  if (!o || cap_m == 0) return JH_ERR_INVALID_ARGUMENT;
  o->run.capM = cap_m;
  return JH_OK;
}
void jh_options_set_window(jh_options* o, uint32_t window) {
  if (o) o->run.window = window;
}
void jh_options_set_assertions(jh_options* o, int gd, int an, int s2) {
  if (!o) return;
  o->run.flags.gdAsserted = gd != 0;
  o->run.flags.anAsserted = an != 0;
  o->run.flags.s2Asserted = s2 != 0;
}
jh_status jh_options_set_colon_reading(jh_options* o, jh_colon_reading reading) {
  if (!o) return JH_ERR_INVALID_ARGUMENT;
  switch (reading) {
    case JH_COLON_X1: o->run.reading = jh::ColonReading::X1; return JH_OK;
    case JH_COLON_XNEXT: o->run.reading = jh::ColonReading::XNext; return JH_OK;
  }
  return JH_ERR_INVALID_ARGUMENT;
}
void jh_options_set_oracle(jh_options* o, int enabled) {
  if (o) o->run.oracle = enabled != 0;
}

jh_status jh_run(const jh_problem* problem, const char* command, const jh_options* options, jh_format format,
                 char** report) {
  if (report) *report = nullptr;
  if (!problem || !command) return JH_ERR_INVALID_ARGUMENT;
  if (format != JH_FORMAT_JSON && format != JH_FORMAT_TABLE) return JH_ERR_INVALID_ARGUMENT;
  const auto& names = jh::commandNames();
  bool known = false;
  for (const auto& n : names) known = known || n == command;
  if (!known) return JH_ERR_INVALID_ARGUMENT;
  try {
    jh::RunOptions run = options ? options->run : jh::RunOptions{};
    jh::RunResult r = jh::runCommand(command, problem->spec, run);
    auto fmt = format == JH_FORMAT_JSON ? jh::ReportFormat::Json : jh::ReportFormat::Table;
    jh_status st = deliver(jh::emitReport(r.report, fmt), report);
    if (st != JH_OK) return st;
    return static_cast<jh_status>(r.exitCode);
  } catch (const std::bad_alloc&) {
    return JH_ERR_OUT_OF_MEMORY;
  } catch (const std::invalid_argument& e) {
    deliver(e.what(), report);
    return JH_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    deliver(e.what(), report);
    return JH_ERR_FAILURE;
  }
}

size_t jh_command_count(void) { return jh::commandNames().size(); }

const char* jh_command_name(size_t index) {
  const auto& names = jh::commandNames();
  return index < names.size() ? names[index].c_str() : nullptr;
}

const char* jh_status_name(jh_status status) {
  switch (status) {
    case JH_OK: return "ok";
    case JH_ERR_FAILURE: return "failure";
    case JH_ERR_PARSE: return "parse error";
    case JH_ERR_HYPOTHESIS: return "hypothesis surrogate failure";
    case JH_ERR_NONSTABILIZED: return "non-stabilization";
    case JH_ERR_CROSSCHECK: return "cross-check violation";
    case JH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case JH_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown";
}

const char* jh_version(void) { return "1.0.0"; }

void jh_string_free(char* s) { std::free(s); }

}  // extern "C"
