#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cc/kernel.hpp"
#include "cc/parser.hpp"

using namespace cc;

static Term tm(const std::string& s) { return parse_term(s); }

TEST_CASE("alpha equality ignores binder names") {
  CHECK(alpha_eq(tm("fun (x : Type), x"), tm("fun (y : Type), y")));
  CHECK(alpha_eq(tm("Pi (x : Type), x -> x"), tm("Pi (A : Type), A -> A")));
  CHECK_FALSE(alpha_eq(tm("fun (x : Type), x"), tm("fun (x : Type), Type")));
}

TEST_CASE("beta reduction") {
  Environment env;
  Context ctx;
  ctx.add({"N", sort(), nullptr});
  ctx.add({"a", mk_const("N"), nullptr});
  Term t = mk_app(tm("fun (x : N), x"), mk_const("a"));
  CHECK(alpha_eq(normalize(t, env, ctx), mk_const("a")));
}

TEST_CASE("delta and zeta unfold definitions") {
  Environment env;
  Context ctx;
  ctx.add({"N", sort(), nullptr});
  ctx.add({"f", tm("N -> N"), nullptr});
  ctx.add({"a", mk_const("N"), nullptr});
  ctx.add({"c", mk_const("N"), mk_app(mk_const("f"), mk_const("a"))});
  CHECK(alpha_eq(normalize(mk_const("c"), env, ctx), tm("f a")));
  CHECK(defeq(mk_const("c"), tm("f a"), env, ctx));
}

TEST_CASE("eta reduction") {
  Environment env;
  Context ctx;
  ctx.add({"N", sort(), nullptr});
  ctx.add({"f", tm("N -> N"), nullptr});
  CHECK(alpha_eq(normalize(tm("fun (x : N), f x"), env, ctx), mk_const("f")));
  // x occurs free in the function part: no eta
  Term keep = tm("fun (x : N -> N), x x");
  CHECK(alpha_eq(normalize(keep, env, ctx), keep));
}

TEST_CASE("type inference on dependent application") {
  AxiomTable ax;  // reuse its environment facilities only
  Context ctx;
  ctx.add({"N", sort(), nullptr});
  ctx.add({"V", tm("N -> Type"), nullptr});
  ctx.add({"a", mk_const("N"), nullptr});
  ctx.add({"g", tm("Pi (x : N), V x"), nullptr});
  Term t = tm("g a");
  CHECK(alpha_eq(infer_type(t, ax.env(), ctx), tm("V a")));
}

TEST_CASE("type errors are reported") {
  Environment env;
  Context ctx;
  ctx.add({"N", sort(), nullptr});
  ctx.add({"a", mk_const("N"), nullptr});
  CHECK_THROWS_AS(infer_type(mk_app(mk_const("a"), mk_const("a")), env, ctx),
                  KernelError);
  CHECK_THROWS_AS(infer_type(mk_const("zzz"), env, ctx), KernelError);
  CHECK_THROWS_AS(infer_type(mk_var(0), env, ctx), KernelError);
}

TEST_CASE("check_decl validates values against declared types") {
  Environment env;
  Context ctx;
  ctx.add({"N", sort(), nullptr});
  ctx.add({"f", tm("N -> N"), nullptr});
  ctx.add({"a", mk_const("N"), nullptr});
  CHECK_NOTHROW(check_decl({"c", mk_const("N"), tm("f a")}, env, ctx));
  CHECK_THROWS_AS(check_decl({"c", tm("N -> N"), tm("f a")}, env, ctx),
                  KernelError);
  CHECK_THROWS_AS(check_decl({"c", tm("f a"), nullptr}, env, ctx),
                  KernelError);
}

TEST_CASE("defeq is stable under shared subterm reuse") {
  // regression: the normalizer memo must not alias recycled nodes
  Environment env;
  Context ctx;
  ctx.add({"N", sort(), nullptr});
  ctx.add({"B", tm("N -> Type"), nullptr});
  ctx.add({"f", tm("Pi (a : N), B a"), nullptr});
  ctx.add({"a", mk_const("N"), nullptr});
  for (int i = 0; i < 50; ++i) {
    Term t = tm("f a");
    CHECK(alpha_eq(infer_type(t, env, ctx), tm("B a")));
  }
}

TEST_CASE("normalization under binders") {
  Environment env;
  Context ctx;
  ctx.add({"N", sort(), nullptr});
  ctx.add({"f", tm("N -> N"), nullptr});
  Term t = tm("fun (x : N), (fun (y : N), f y) x");
  CHECK(alpha_eq(normalize(t, env, ctx), mk_const("f")));
}
