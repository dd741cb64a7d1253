#include "k3walls/k3walls.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "k3walls/report.hpp"

using namespace k3walls;

struct k3w_session {
  RankParam n;
  Degree d;
  Frame frame = Frame::hilbert;
  bool allow_incomplete = false;
  std::optional<Rational> lo, hi;
};

namespace {

thread_local std::string g_last_error;

k3w_status fail(k3w_status st, std::string msg) {
  g_last_error = std::move(msg);
  return st;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

OutputFormat to_format(k3w_format f) {
  switch (f) {
    case K3W_FORMAT_TABLE: return OutputFormat::table;
    case K3W_FORMAT_JSON: return OutputFormat::json;
    case K3W_FORMAT_SVG: return OutputFormat::svg;
    case K3W_FORMAT_DOT: return OutputFormat::dot;
  }
  throw Error(Errc::invalid_argument, "unknown format code");
}

template <class F>
k3w_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(static_cast<k3w_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(K3W_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(K3W_INTERNAL, e.what());
  } catch (...) {
    return fail(K3W_INTERNAL, "unknown failure");
  }
}

void require_complete(const k3w_session* s, const char* what) {
  if (s->n.value() >= 3 && !s->allow_incomplete)
    throw Error(Errc::incomplete, std::string(what) + " not certified complete for n >= 3 (pass --allow-incomplete)");
}

WallCatalog session_catalog(const k3w_session* s) {
  WallCatalog cat = all_walls(s->n, s->d);
  if (s->lo || s->hi)
    cat = filter_window(cat, s->lo.value_or(Rational(0)), s->hi.value_or(Rational(Integer(1), s->n.z())));
  return cat;
}

}  // namespace

extern "C" {

k3w_status k3w_session_create(long n, long d, k3w_session** out) {
  if (!out) return fail(K3W_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new k3w_session{RankParam(n), Degree(d)};
    return K3W_OK;
  });
}

void k3w_session_destroy(k3w_session* s) { delete s; }

k3w_status k3w_set_frame(k3w_session* s, k3w_frame frame) {
  if (!s) return fail(K3W_INVALID_ARGUMENT, "null session");
  if (frame != K3W_FRAME_HILBERT && frame != K3W_FRAME_BM) return fail(K3W_INVALID_ARGUMENT, "unknown frame code");
  s->frame = frame == K3W_FRAME_HILBERT ? Frame::hilbert : Frame::bm;
  return K3W_OK;
}

k3w_status k3w_set_allow_incomplete(k3w_session* s, int allow) {
  if (!s) return fail(K3W_INVALID_ARGUMENT, "null session");
  s->allow_incomplete = allow != 0;
  return K3W_OK;
}

k3w_status k3w_set_gamma_window(k3w_session* s, const char* lo, const char* hi) {
  if (!s) return fail(K3W_INVALID_ARGUMENT, "null session");
  return guarded([&] {
    std::optional<Rational> l, h;
    if (lo) l = parse_rational(lo);
    if (hi) h = parse_rational(hi);
    if (l && h && *l >= *h) throw Error(Errc::invalid_argument, "gamma window needs lo < hi");
    s->lo = l;
    s->hi = h;
    return K3W_OK;
  });
}

k3w_status k3w_walls(k3w_session* s, k3w_format fmt, char** out) {
  if (!s || !out) return fail(K3W_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup(render_walls(session_catalog(s), s->n, s->d, s->frame, to_format(fmt)));
    return K3W_OK;
  });
}

k3w_status k3w_chain(k3w_session* s, k3w_format fmt, char** out) {
  if (!s || !out) return fail(K3W_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    require_complete(s, "chain");
    *out = dup(render_chain(build_chain(s->n, s->d), s->frame, to_format(fmt)));
    return K3W_OK;
  });
}

k3w_status k3w_plot(k3w_session* s, char** out) {
  if (!s || !out) return fail(K3W_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    require_complete(s, "wall diagram");
    *out = dup(render_plot(session_catalog(s), s->n, s->d, s->frame));
    return K3W_OK;
  });
}

k3w_status k3w_classify(k3w_session* s, const char* vector, long tss_bound, k3w_format fmt, char** out) {
  if (!s || !vector || !out) return fail(K3W_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const MukaiVector u = parse_vector(vector);
    *out = dup(classify(u, s->n, s->d, s->frame, tss_bound > 0 ? tss_bound : 50, to_format(fmt)));
    return K3W_OK;
  });
}

k3w_status k3w_verify(long n, long d_lo, long d_hi, int oracle, long bound, k3w_format fmt, char** out) {
  if (!out) return fail(K3W_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    const VerifyOutcome r = verify(RankParam(n), d_lo, d_hi, oracle != 0,
                                   bound > 0 ? std::optional<long>(bound) : std::nullopt, to_format(fmt));
    *out = dup(r.text);
    if (!r.ok) return fail(K3W_CHECK_FAILED, "one or more checks failed");
    return K3W_OK;
  });
}

const char* k3w_last_error(void) { return g_last_error.c_str(); }

const char* k3w_status_string(k3w_status st) {
  switch (st) {
    case K3W_OK: return "ok";
    case K3W_INVALID_ARGUMENT: return "invalid argument";
    case K3W_DEGENERATE_VECTOR: return "degenerate vector";
    case K3W_GAMMA_UNDEFINED: return "gamma undefined";
    case K3W_OUT_OF_RANGE: return "out of range";
    case K3W_LINE_MISSES_WALL: return "line misses wall";
    case K3W_RANK_UNDETERMINED: return "rank undetermined";
    case K3W_NOT_BUNDLE_WALL: return "not a bundle wall";
    case K3W_INCOMPLETE: return "incomplete";
    case K3W_CHECK_FAILED: return "check failed";
    case K3W_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void k3w_string_free(char* p) { std::free(p); }

}  // extern "C"
