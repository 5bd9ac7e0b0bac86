#include "jacobi/jacobi.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <sstream>
#include <string>

#include "jacobi/denominators.hpp"
#include "jacobi/error.hpp"
#include "jacobi/quotient.hpp"
#include "jacobi/relations.hpp"
#include "jacobi/series.hpp"
#include "jacobi/verify.hpp"

struct jd_session {
  int degree = -1;
  std::uint64_t seed = 1;
  jd_format format = JD_FORMAT_TEXT;
  std::string cache_dir;
  int max = 50;
  std::string error;
};

namespace {

using namespace jacobi;

jd_status fail(jd_session* s, jd_status code, const std::string& msg) {
  s->error = msg;
  return code;
}

template <class F>
jd_status guard(jd_session* s, F&& f) {
  if (!s) return JD_INVALID_ARGUMENT;
  s->error.clear();
  try {
    set_cache_dir(s->cache_dir);
    return f();
  } catch (const ParseError& e) {
    return fail(s, JD_PARSE, e.what());
  } catch (const CapExceeded& e) {
    return fail(s, JD_CAP, e.what());
  } catch (const DomainError& e) {
    return fail(s, JD_DOMAIN, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(s, JD_IO, e.what());
  } catch (const std::exception& e) {
    return fail(s, JD_INTERNAL, e.what());
  } catch (...) {
    return fail(s, JD_INTERNAL, "unknown error");
  }
}

jd_status give(const std::string& text, char** out) {
  char* p = static_cast<char*>(std::malloc(text.size() + 1));
  if (!p) return JD_INTERNAL;
  std::memcpy(p, text.c_str(), text.size() + 1);
  *out = p;
  return JD_OK;
}

bool structured(const jd_session* s) { return s->format == JD_FORMAT_STRUCTURED; }

std::string quote(const std::string& v) { return v.find(' ') == std::string::npos ? v : "\"" + v + "\""; }

std::string join_coords(const Coordinates& c, const char* sep) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += sep;
    out += c[i].get_str();
  }
  return out;
}

QuotientMethod parse_method(const char* m) {
  if (!m || !*m || !std::strcmp(m, "auto")) return QuotientMethod::Auto;
  if (!std::strcmp(m, "full")) return QuotientMethod::Full;
  if (!std::strcmp(m, "chord")) return QuotientMethod::Chord;
  throw DomainError(std::string("unknown method '") + m + "' (expected auto, full or chord)");
}

void check_degree(const jd_session* s, int degree) {
  if (s->degree >= 0 && degree > s->degree)
    throw CapExceeded("degree " + std::to_string(degree) + " is above the configured N=" + std::to_string(s->degree));
}

std::string certificate_text(const jd_session* s, const Certificate& c) {
  if (!structured(s)) return c.to_text();
  std::ostringstream os;
  os << "obligation=" << c.id << " statement=" << quote(c.statement) << " range=" << quote(c.range)
     << " checked=" << c.checked << " result=" << (c.pass ? "pass" : "fail");
  if (!c.pass) os << " witness=" << quote(c.witness);
  os << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* jd_version(void) { return JD_VERSION; }

const char* jd_status_name(jd_status s) {
  switch (s) {
    case JD_OK: return "ok";
    case JD_INVALID_ARGUMENT: return "invalid argument";
    case JD_PARSE: return "parse error";
    case JD_DOMAIN: return "domain error";
    case JD_CAP: return "degree cap exceeded";
    case JD_IO: return "i/o error";
    case JD_VERIFY_FAILED: return "verification failed";
    case JD_INTERNAL: return "internal error";
  }
  return "unknown status";
}

jd_status jd_session_new(jd_session** out) {
  if (!out) return JD_INVALID_ARGUMENT;
  *out = new (std::nothrow) jd_session;
  return *out ? JD_OK : JD_INTERNAL;
}

void jd_session_free(jd_session* s) { delete s; }

const char* jd_last_error(const jd_session* s) { return s ? s->error.c_str() : "null session"; }

jd_status jd_set_degree(jd_session* s, int degree) {
  if (!s) return JD_INVALID_ARGUMENT;
  if (degree > kDefaultCap) return fail(s, JD_CAP, "N=" + std::to_string(degree) + " exceeds the cap " + std::to_string(kDefaultCap));
  s->degree = degree < 0 ? -1 : degree;
  return JD_OK;
}

jd_status jd_set_seed(jd_session* s, uint64_t seed) {
  if (!s) return JD_INVALID_ARGUMENT;
  s->seed = seed;
  return JD_OK;
}

jd_status jd_set_format(jd_session* s, jd_format f) {
  if (!s || (f != JD_FORMAT_TEXT && f != JD_FORMAT_STRUCTURED)) return JD_INVALID_ARGUMENT;
  s->format = f;
  return JD_OK;
}

jd_status jd_set_cache_dir(jd_session* s, const char* dir) {
  if (!s) return JD_INVALID_ARGUMENT;
  std::string d = dir ? dir : "";
  if (!d.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(d, ec);
    if (ec || !std::filesystem::is_directory(d)) return fail(s, JD_IO, "cannot use cache directory " + d + ": " + ec.message());
  }
  s->cache_dir = d;
  return JD_OK;
}

jd_status jd_set_max(jd_session* s, int max) {
  if (!s) return JD_INVALID_ARGUMENT;
  if (max < 1) return fail(s, JD_INVALID_ARGUMENT, "max must be positive");
  s->max = max;
  return JD_OK;
}

jd_status jd_header(jd_session* s, char** out) {
  if (!out) return JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    std::ostringstream os;
    std::string n = s->degree < 0 ? "default" : std::to_string(s->degree);
    std::string cache = s->cache_dir.empty() ? "none" : s->cache_dir;
    if (structured(s))
      os << "version=" << JD_VERSION << " seed=" << s->seed << " N=" << n << " cache=" << quote(cache) << "\n";
    else
      os << "# jdiag " << JD_VERSION << " seed=" << s->seed << " N=" << n << " cache=" << cache << "\n";
    return give(os.str(), out);
  });
}

jd_status jd_dim(jd_session* s, const char* support, int degree, const char* method, int* out) {
  if (!support || !out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    check_degree(s, degree);
    QuotientOptions o;
    o.method = parse_method(method);
    *out = quotient_basis(Support::parse(support), degree, o)->dim();
    return JD_OK;
  });
}

jd_status jd_reduce(jd_session* s, const char* text, char** out) {
  if (!text || !out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    Combination x = parse_combination(text);
    std::ostringstream os;
    Combination normal(x.support());
    const std::string sup = x.support().to_string();
    if (!structured(s)) os << "support: " << sup << "\n";
    for (int d = 0; d <= x.max_degree(); ++d) {
      Combination part = x.part(d);
      if (part.empty()) continue;
      check_degree(s, d);
      auto q = quotient_basis(x.support(), d);
      Coordinates c = q->reduce(part);
      normal.add(q->lift(c));
      if (structured(s)) {
        std::string basis;
        for (const auto& code : q->basis_codes()) basis += (basis.empty() ? "" : ",") + code_hex(code);
        os << "support=" << sup << " degree=" << d << " dim=" << q->dim() << " coords=" << join_coords(c, ",")
           << " basis=" << basis << "\n";
      } else {
        os << "degree " << d << ": dim " << q->dim() << ", coordinates " << join_coords(c, " ") << "\n";
      }
    }
    if (!structured(s)) {
      os << "normal form:\n";
      os << (normal.empty() ? "0\n" : normal.to_text());
    }
    return give(os.str(), out);
  });
}

jd_status jd_chordify(jd_session* s, const char* text, char** out) {
  if (!text || !out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    Combination x = parse_combination(text);
    if (x.support().has_colors()) throw DomainError("chordify needs a support without colors");
    Combination c = chordify(x);
    return give(c.empty() ? "0\n" : c.to_text(), out);
  });
}

int jd_suite_count(void) { return static_cast<int>(suite_names().size()); }

const char* jd_suite_name(int i) {
  if (i < 0 || i >= jd_suite_count()) return nullptr;
  return suite_names()[static_cast<size_t>(i)].c_str();
}

jd_status jd_verify(jd_session* s, const char* suite, unsigned flags, char** out) {
  if (!suite || !out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    VerifyConfig cfg;
    cfg.degree = s->degree;
    cfg.seed = s->seed;
    cfg.max = s->max;
    cfg.symbolic = flags & JD_VERIFY_SYMBOLIC;
    std::vector<std::string> names;
    if (!std::strcmp(suite, "all")) names = suite_names();
    else names.push_back(suite);
    std::string text;
    bool pass = true;
    for (const auto& n : names) {
      SuiteResult r = run_suite(n, cfg);
      pass = pass && r.pass();
      text += structured(s) ? format_structured(r) : format_text(r);
    }
    if (names.size() > 1) text += structured(s) ? std::string("suite=all result=") + (pass ? "pass" : "fail") + "\n"
                                                 : std::string("result all: ") + (pass ? "pass" : "fail") + "\n";
    jd_status st = give(text, out);
    if (st != JD_OK) return st;
    if (!pass) {
      s->error = "verification failed";
      return JD_VERIFY_FAILED;
    }
    return JD_OK;
  });
}

jd_status jd_denom_bound(jd_session* s, const char* kind, int parameter, char** out) {
  if (!kind || !out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    DenominatorBound b = bound(parse_kind(kind), parameter);
    std::ostringstream os;
    std::string name = kind_name(b.kind) + "(" + std::to_string(parameter) + ")";
    if (b.kind == BoundKind::TwoLeg) name = "D(2;" + std::to_string(parameter) + ")";
    if (structured(s))
      os << "bound=" << name << " value=" << b.value << " factorization=" << quote(factorization_to_string(b.factorization)) << "\n";
    else
      os << name << " = " << b.value << "\n" << name << " = " << factorization_to_string(b.factorization) << "\n";
    return give(os.str(), out);
  });
}

jd_status jd_denom_check(jd_session* s, const char* obligation, int mutate, char** out) {
  if (!obligation || !out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    std::vector<std::string> ids;
    if (!std::strcmp(obligation, "all")) ids = obligation_ids();
    else ids.push_back(obligation);
    std::string text;
    bool pass = true;
    for (const auto& id : ids) {
      Certificate c = verify_obligation(id, s->max, mutate != 0);
      pass = pass && c.pass;
      if (!text.empty() && !structured(s)) text += "\n";
      text += certificate_text(s, c);
    }
    jd_status st = give(text, out);
    if (st != JD_OK) return st;
    if (!pass) {
      s->error = "certificate failed";
      return JD_VERIFY_FAILED;
    }
    return JD_OK;
  });
}

jd_status jd_anomaly_invert_symbolic(jd_session* s, int N, uint32_t zero_mask, char** out) {
  if (!out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    if (N < 0) throw DomainError("N must be non-negative");
    std::set<int> zero;
    for (int k = 1; k < 32; ++k)
      if (zero_mask & (1u << k)) zero.insert(2 * k);
    auto A = symbolic_anomaly(N, zero);
    auto B = invert_anomaly(A, N);
    bool exact = true;
    for (const auto& [d, r] : anomaly_residual(A, B, N)) exact = exact && r.empty();
    std::ostringstream os;
    for (int d = 2; d <= N; d += 2) {
      std::string v = B.count(d) ? B.at(d).to_string() : "0";
      if (structured(s)) os << "B=" << d << " value=" << quote(v) << "\n";
      else os << "B_" << d << " = " << v << "\n";
    }
    os << (structured(s) ? "forward-identity=" : "forward identity: ") << (exact ? "exact" : "FAILED") << "\n";
    jd_status st = give(os.str(), out);
    if (st == JD_OK && !exact) return fail(s, JD_VERIFY_FAILED, "forward identity failed");
    return st;
  });
}

jd_status jd_anomaly_invert(jd_session* s, const char* text, int N, char** out) {
  if (!text || !out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    Combination a = parse_combination(text);
    if (a.support() != two_leg_support()) throw DomainError("the anomaly must be a two-leg combination on colors v1, v2");
    GradedParts<Combination> A;
    for (int d = 1; d <= a.max_degree(); ++d) {
      Combination p = a.part(d);
      if (!p.empty()) A.emplace(d - 1, p);
    }
    auto B = invert_anomaly(A, N);
    bool exact = true;
    for (const auto& [d, r] : anomaly_residual(A, B, N)) exact = exact && r.empty();
    std::ostringstream os;
    for (const auto& [d, part] : B) {
      os << (structured(s) ? "B=" : "# B_") << d << (structured(s) ? " terms=" : ", terms ") << part.size() << "\n";
      os << (part.empty() ? "0\n" : part.to_text()) << "\n";
    }
    os << (structured(s) ? "forward-identity=" : "forward identity: ") << (exact ? "exact" : "FAILED") << "\n";
    jd_status st = give(os.str(), out);
    if (st == JD_OK && !exact) return fail(s, JD_VERIFY_FAILED, "forward identity failed");
    return st;
  });
}

jd_status jd_cache_stats(jd_session* s, char** out) {
  if (!out) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    if (s->cache_dir.empty()) return fail(s, JD_INVALID_ARGUMENT, "no cache directory configured");
    CacheStats c = cache_stats(s->cache_dir);
    std::ostringstream os;
    if (structured(s))
      os << "cache=" << quote(s->cache_dir) << " files=" << c.files << " bytes=" << c.bytes << " locks=" << c.locks << "\n";
    else
      os << s->cache_dir << ": " << c.files << " files, " << c.bytes << " bytes, " << c.locks << " locks\n";
    return give(os.str(), out);
  });
}

jd_status jd_cache_purge(jd_session* s, int* removed) {
  if (!removed) return s ? fail(s, JD_INVALID_ARGUMENT, "null argument") : JD_INVALID_ARGUMENT;
  return guard(s, [&] {
    if (s->cache_dir.empty()) return fail(s, JD_INVALID_ARGUMENT, "no cache directory configured");
    *removed = cache_purge(s->cache_dir);
    clear_quotient_memo();
    return JD_OK;
  });
}

void jd_string_free(char* p) { std::free(p); }

}  // extern "C"
