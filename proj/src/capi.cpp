#include "haarint.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "haar.hpp"
#include "monte_carlo.hpp"
#include "rational.hpp"
#include "schur_weyl.hpp"
#include "serialize.hpp"
#include "tableaux.hpp"
#include "verify.hpp"
#include "weingarten.hpp"

struct haarint_context {
  int degree_cap = haarint::tableaux::kDefaultDegreeCap;
  int oracle_cap = haarint::weingarten::kDefaultOracleCap;
  std::string last_error;
};

namespace {

using haarint::schur_weyl::IndexTuple;
using json = nlohmann::json;

char* copy_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

haarint_status fail(haarint_context* ctx, haarint_status status, const char* what) {
  if (ctx) ctx->last_error = what;
  return status;
}

template <typename Fn>
haarint_status guarded(haarint_context* ctx, char** out_json, Fn&& fn) {
  if (!ctx) return HAARINT_ERR_INVALID_ARGUMENT;
  if (!out_json) return fail(ctx, HAARINT_ERR_INVALID_ARGUMENT, "null output pointer");
  *out_json = nullptr;
  try {
    json result = fn();
    char* s = copy_string(result.dump());
    if (!s) return fail(ctx, HAARINT_ERR_INTERNAL, "allocation failure");
    *out_json = s;
    ctx->last_error.clear();
    return HAARINT_OK;
  } catch (const haarint::capacity_error& e) {
    return fail(ctx, HAARINT_ERR_CAPACITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, HAARINT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(ctx, HAARINT_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, HAARINT_ERR_INTERNAL, e.what());
  }
}

IndexTuple to_tuple(const int* values, int d) {
  if (!values) throw std::invalid_argument("null index tuple");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  return IndexTuple(values, values + d);
}

haarint::tableaux::YoungDiagram to_shape(const int* rows, int len) {
  if (!rows) throw std::invalid_argument("null shape");
  if (len < 1) throw std::invalid_argument("empty shape");
  return haarint::tableaux::YoungDiagram(std::vector<int>(rows, rows + len));
}

}  // namespace

extern "C" {

haarint_context* haarint_context_new(void) { return new (std::nothrow) haarint_context; }

void haarint_context_free(haarint_context* ctx) { delete ctx; }

haarint_status haarint_set_degree_cap(haarint_context* ctx, int cap) {
  if (!ctx) return HAARINT_ERR_INVALID_ARGUMENT;
  if (cap < 1) return fail(ctx, HAARINT_ERR_INVALID_ARGUMENT, "cap must be at least 1");
  ctx->degree_cap = cap;
  ctx->last_error.clear();
  return HAARINT_OK;
}

haarint_status haarint_set_oracle_cap(haarint_context* ctx, int cap) {
  if (!ctx) return HAARINT_ERR_INVALID_ARGUMENT;
  if (cap < 1) return fail(ctx, HAARINT_ERR_INVALID_ARGUMENT, "cap must be at least 1");
  ctx->oracle_cap = cap;
  ctx->last_error.clear();
  return HAARINT_OK;
}

const char* haarint_last_error(const haarint_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

const char* haarint_status_name(haarint_status status) {
  switch (status) {
    case HAARINT_OK: return "HAARINT_OK";
    case HAARINT_ERR_INVALID_ARGUMENT: return "HAARINT_ERR_INVALID_ARGUMENT";
    case HAARINT_ERR_CAPACITY: return "HAARINT_ERR_CAPACITY";
    case HAARINT_ERR_DOMAIN: return "HAARINT_ERR_DOMAIN";
    case HAARINT_ERR_INTERNAL: return "HAARINT_ERR_INTERNAL";
  }
  return "HAARINT_ERR_INTERNAL";
}

void haarint_string_free(char* s) { delete[] s; }

haarint_status haarint_moment(haarint_context* ctx, const int* i, const int* j,
                              const int* k, const int* l, int d, long n,
                              char** out_json) {
  return guarded(ctx, out_json, [&] {
    auto value = haarint::moments::moment(to_tuple(i, d), to_tuple(j, d), to_tuple(k, d),
                                          to_tuple(l, d), n, ctx->degree_cap);
    return haarint::serialize::moment_json(value);
  });
}

haarint_status haarint_moment_symbolic(haarint_context* ctx, const int* i,
                                       const int* j, const int* k, const int* l,
                                       int d, char** out_json) {
  return guarded(ctx, out_json, [&] {
    auto branches = haarint::moments::moment_symbolic(
        to_tuple(i, d), to_tuple(j, d), to_tuple(k, d), to_tuple(l, d), ctx->degree_cap);
    return haarint::serialize::branches_json(branches);
  });
}

haarint_status haarint_weingarten_moment(haarint_context* ctx, const int* i,
                                         const int* j, const int* k, const int* l,
                                         int d, long n, char** out_json) {
  return guarded(ctx, out_json, [&] {
    auto value = haarint::weingarten::wg_moment(to_tuple(i, d), to_tuple(j, d),
                                                to_tuple(k, d), to_tuple(l, d), n,
                                                ctx->oracle_cap);
    return haarint::serialize::moment_json(value);
  });
}

haarint_status haarint_mc_moment(haarint_context* ctx, const int* i, const int* j,
                                 const int* k, const int* l, int d, long n,
                                 uint64_t samples, uint64_t seed, char** out_json) {
  return guarded(ctx, out_json, [&] {
    auto est = haarint::mc::mc_moment(to_tuple(i, d), to_tuple(j, d), to_tuple(k, d),
                                      to_tuple(l, d), n, samples, seed);
    return haarint::serialize::estimate_json(est);
  });
}

haarint_status haarint_one_row_moment(haarint_context* ctx, const int* j,
                                      const int* l, int d, long n, char** out_json) {
  return guarded(ctx, out_json, [&] {
    auto value = haarint::moments::one_row_moment(to_tuple(j, d), to_tuple(l, d), n,
                                                  ctx->degree_cap);
    return haarint::serialize::moment_json(value);
  });
}

haarint_status haarint_partitions(haarint_context* ctx, int d, char** out_json) {
  return guarded(ctx, out_json, [&] {
    json out = json::array();
    for (const auto& shape : haarint::tableaux::partitions(d, ctx->degree_cap)) {
      out.push_back(json{
          {"shape", haarint::serialize::diagram_json(shape)},
          {"dimension", haarint::tableaux::standard_tableau_count(shape).get_str()}});
    }
    return json{{"partitions", out}};
  });
}

haarint_status haarint_tableaux(haarint_context* ctx, const int* shape_rows,
                                int shape_len, char** out_json) {
  return guarded(ctx, out_json, [&] {
    auto shape = to_shape(shape_rows, shape_len);
    if (shape.size() > ctx->degree_cap)
      throw haarint::capacity_error("shape size " + std::to_string(shape.size()) +
                                    " exceeds cap " + std::to_string(ctx->degree_cap));
    json tabs = json::array();
    json contents = json::array();
    for (const auto& t : haarint::tableaux::standard_tableaux(shape)) {
      tabs.push_back(haarint::serialize::tableau_json(t));
      contents.push_back(t.content_vector());
    }
    return json{{"shape", haarint::serialize::diagram_json(shape)},
                {"dimension", haarint::tableaux::standard_tableau_count(shape).get_str()},
                {"tableaux", tabs},
                {"contents", contents}};
  });
}

haarint_status haarint_matrix_unit(haarint_context* ctx, const int* shape_rows,
                                   int shape_len, int row, int col, char** out_json) {
  return guarded(ctx, out_json, [&] {
    auto shape = to_shape(shape_rows, shape_len);
    if (shape.size() > ctx->degree_cap)
      throw haarint::capacity_error("shape size " + std::to_string(shape.size()) +
                                    " exceeds cap " + std::to_string(ctx->degree_cap));
    auto tabs = haarint::tableaux::standard_tableaux(shape);
    int f = static_cast<int>(tabs.size());
    if (row < 1 || col < 1 || row > f || col > f)
      throw std::invalid_argument("tableau index outside 1.." + std::to_string(f));
    auto unit = haarint::algebra::matrix_unit(tabs[row - 1], tabs[col - 1]);
    const auto& norm = haarint::schur_weyl::unit_norm_poly(unit);
    return json{{"row", haarint::serialize::tableau_json(unit.row)},
                {"col", haarint::serialize::tableau_json(unit.col)},
                {"element", haarint::serialize::element_json(unit.element)},
                {"c_squared", haarint::rational_to_string(unit.c_squared)},
                {"norm", haarint::serialize::polynomial_json(norm)}};
  });
}

haarint_status haarint_verify(haarint_context* ctx, int d, int full, char** out_json) {
  return guarded(ctx, out_json, [&] {
    json checks = json::array();
    for (const auto& r : haarint::verify::run_suite(d, full != 0, ctx->degree_cap,
                                                    ctx->oracle_cap)) {
      checks.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return json{{"checks", checks}};
  });
}

haarint_status haarint_gram_dump(haarint_context* ctx, int d, long n, char** out_json) {
  return guarded(ctx, out_json, [&] {
    const auto& w = haarint::weingarten::weingarten_matrix(d, n, ctx->oracle_cap);
    auto g = haarint::weingarten::gram_matrix(d, n);
    return json{{"gram", haarint::serialize::integer_matrix_json(g)},
                {"weingarten", haarint::serialize::rational_matrix_json(w)}};
  });
}

}  // extern "C"
