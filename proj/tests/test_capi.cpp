#include <gtest/gtest.h>

#include <idealkit/idealkit.h>

#include <string>

namespace {

const char* kCubic = R"({"field":"Q","vars":["x","y","z"],"generators":["x^2 - y","x^3 - z"]})";

struct Owned {
  char* s = nullptr;
  ~Owned() { ik_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct IdealHandle {
  ik_ideal* p = nullptr;
  ~IdealHandle() { ik_ideal_free(p); }
};

}  // namespace

TEST(CApi, VersionAndNames) {
  EXPECT_STREQ(ik_version(), "1.0.0");
  EXPECT_STREQ(ik_status_name(IK_OK), "Ok");
  EXPECT_STRNE(ik_status_name(IK_ERR_PARSE), ik_status_name(IK_ERR_INTERNAL));
  EXPECT_GT(ik_bound_count(), 20u);
  EXPECT_EQ(ik_bound_name(ik_bound_count()), nullptr);
  EXPECT_EQ(ik_lemma_count(), 14u);
}

TEST(CApi, IdealLifecycleAndGroebner) {
  IdealHandle h;
  ASSERT_EQ(ik_ideal_from_json(kCubic, &h.p), IK_OK);
  EXPECT_EQ(ik_ideal_nvars(h.p), 3u);
  EXPECT_EQ(ik_ideal_degree(h.p), 3);
  int in = 0;
  ASSERT_EQ(ik_ideal_contains(h.p, "y^3 - z^2", &in), IK_OK);
  EXPECT_EQ(in, 1);
  ASSERT_EQ(ik_ideal_contains(h.p, "y - z", &in), IK_OK);
  EXPECT_EQ(in, 0);
  Owned gb;
  ASSERT_EQ(ik_groebner(h.p, "lex", IK_TEXT, &gb.s), IK_OK);
  EXPECT_NE(gb.str().find("y^3 - z^2"), std::string::npos);
  Owned el;
  ASSERT_EQ(ik_eliminate(h.p, "y,z", IK_TEXT, &el.s), IK_OK);
  EXPECT_NE(el.str().find("y^3 - z^2"), std::string::npos);
  Owned js;
  ASSERT_EQ(ik_groebner(h.p, nullptr, IK_JSON, &js.s), IK_OK);
  EXPECT_NE(js.str().find("\"basis\""), std::string::npos);
}

TEST(CApi, FromStrings) {
  const char* vars[] = {"x", "y"};
  const char* gens[] = {"x*y"};
  IdealHandle h;
  ASSERT_EQ(ik_ideal_from_strings("Q", vars, 2, gens, 1, &h.p), IK_OK);
  Owned q, s;
  ASSERT_EQ(ik_quotient(h.p, "x", IK_TEXT, &q.s), IK_OK);
  EXPECT_EQ(q.str(), "y\n");
  ASSERT_EQ(ik_saturate(h.p, "x", IK_TEXT, &s.s), IK_OK);
  EXPECT_EQ(s.str(), "y\n");
}

TEST(CApi, ErrorCodes) {
  IdealHandle h;
  EXPECT_EQ(ik_ideal_from_json(R"({"field":"Fp:4","vars":["x"],"generators":["x"]})", &h.p),
            IK_ERR_BAD_FIELD_DESCRIPTOR);
  EXPECT_EQ(h.p, nullptr);
  EXPECT_NE(std::string(ik_last_error()).find("BadFieldDescriptor"), std::string::npos);
  EXPECT_EQ(ik_ideal_from_json("{not json", &h.p), IK_ERR_PARSE);
  EXPECT_EQ(ik_ideal_from_json(R"({"field":"Q","vars":["x"],"generators":["x + q"]})", &h.p),
            IK_ERR_UNKNOWN_VARIABLE);
  EXPECT_EQ(ik_ideal_from_json(nullptr, &h.p), IK_ERR_INVALID_ARGUMENT);

  ik_bound_params p;
  ik_bound_params_init(&p);
  p.n = 2;
  p.d = 3;
  Owned out;
  EXPECT_EQ(ik_bound_eval("nope", &p, 0, IK_TEXT, &out.s), IK_ERR_UNKNOWN_BOUND);
  p.n = 0;
  EXPECT_EQ(ik_bound_eval("m", &p, 0, IK_TEXT, &out.s), IK_ERR_INVALID_PARAMETERS);
}

TEST(CApi, Bounds) {
  ik_bound_params p;
  ik_bound_params_init(&p);
  p.n = 2;
  p.d = 3;
  Owned v;
  ASSERT_EQ(ik_bound_eval("m", &p, 0, IK_TEXT, &v.s), IK_OK);
  EXPECT_EQ(v.str(), "324\n");
  p.n = 3;
  p.d = 2;
  Owned t;
  ASSERT_EQ(ik_bound_eval("b5", &p, 0, IK_TEXT, &t.s), IK_OK);
  EXPECT_EQ(t.str(), "(2*d)^(2^(3*n^2+2*n)) @ n=3,d=2\n");
  Owned big;
  EXPECT_EQ(ik_bound_value("b5", &p, 1 << 20, &big.s), IK_ERR_RESOURCE_LIMIT);
  int sign = 0;
  ik_bound_params q = p;
  q.d = 3;
  ASSERT_EQ(ik_bound_compare("b5", &p, "b5", &q, &sign), IK_OK);
  EXPECT_LT(sign, 0);
  Owned lemma;
  int holds = 0;
  ASSERT_EQ(ik_lemma_verify("b2_le", 3, 3, 1, IK_TEXT, &lemma.s, &holds), IK_OK);
  EXPECT_EQ(holds, 1);
}

TEST(CApi, DecisionProcedures) {
  IdealHandle lines;
  ASSERT_EQ(ik_ideal_from_json(R"({"field":"Fp:2","vars":["x","y"],"generators":["x*y"]})", &lines.p), IK_OK);
  ik_verdict v = IK_VERDICT_POSITIVE;
  Owned a;
  ASSERT_EQ(ik_prime_check(lines.p, 1, IK_MODE_EXHAUSTIVE, nullptr, IK_JSON, &a.s, &v), IK_OK);
  EXPECT_EQ(v, IK_VERDICT_NEGATIVE);
  EXPECT_NE(a.str().find("CounterexampleFound"), std::string::npos) << a.str();
  Owned b;
  ASSERT_EQ(ik_max_check(lines.p, 1, IK_MODE_EXHAUSTIVE, nullptr, IK_TEXT, &b.s, &v), IK_OK);
  EXPECT_EQ(v, IK_VERDICT_NEGATIVE);

  IdealHandle conic;
  ASSERT_EQ(ik_ideal_from_json(R"({"field":"Fp:3","vars":["x","y"],"generators":["x^2 + y^2 + 1"]})", &conic.p),
            IK_OK);
  ik_enum_options opts;
  ik_enum_options_init(&opts);
  opts.threads = 2;
  Owned c;
  ASSERT_EQ(ik_prime_check(conic.p, 2, IK_MODE_EXHAUSTIVE, &opts, IK_TEXT, &c.s, &v), IK_OK);
  EXPECT_EQ(v, IK_VERDICT_POSITIVE);
  Owned refused;
  ASSERT_EQ(ik_prime_check(conic.p, -1, IK_MODE_EXHAUSTIVE, nullptr, IK_TEXT, &refused.s, &v), IK_OK);
  EXPECT_EQ(v, IK_VERDICT_UNDETERMINED);
  EXPECT_NE(refused.str().find("Refused"), std::string::npos);

  IdealHandle q;
  ASSERT_EQ(ik_ideal_from_json(R"({"field":"Q","vars":["x"],"generators":["x^2"]})", &q.p), IK_OK);
  Owned d;
  EXPECT_EQ(ik_prime_check(q.p, 1, IK_MODE_EXHAUSTIVE, nullptr, IK_TEXT, &d.s, &v), IK_ERR_INFEASIBLE_ENUMERATION);
}

TEST(CApi, PipelineAndNoether) {
  IdealHandle h;
  ASSERT_EQ(ik_ideal_from_json(R"({"field":"Q","vars":["x","y"],"generators":["x^2 - 2","y^2 - 3"]})", &h.p), IK_OK);
  ik_verdict v = IK_VERDICT_UNDETERMINED;
  Owned out;
  ASSERT_EQ(ik_pipeline(h.p, IK_JSON, &out.s, &v), IK_OK);
  EXPECT_EQ(v, IK_VERDICT_POSITIVE);
  EXPECT_NE(out.str().find("\"h\": \"Y^4 - 10*Y^2 + 1\""), std::string::npos) << out.str();
  Owned n;
  ASSERT_EQ(ik_noether(h.p, IK_TEXT, &n.s), IK_OK);
  EXPECT_FALSE(n.str().empty());
  Owned mp;
  ASSERT_EQ(ik_minpoly(h.p, "x + y", nullptr, IK_TEXT, &mp.s), IK_OK);
  EXPECT_EQ(mp.str(), "Y^4 - 10*Y^2 + 1\n");
}

TEST(CApi, DeterministicOutput) {
  IdealHandle h;
  ASSERT_EQ(ik_ideal_from_json(R"({"field":"Fp:3","vars":["x","y"],"generators":["x^2 - y^2"]})", &h.p), IK_OK);
  ik_enum_options one, four;
  ik_enum_options_init(&one);
  ik_enum_options_init(&four);
  four.threads = 4;
  ik_verdict va, vb;
  Owned a, b;
  ASSERT_EQ(ik_prime_check(h.p, 2, IK_MODE_EXHAUSTIVE, &one, IK_JSON, &a.s, &va), IK_OK);
  ASSERT_EQ(ik_prime_check(h.p, 2, IK_MODE_EXHAUSTIVE, &four, IK_JSON, &b.s, &vb), IK_OK);
  EXPECT_EQ(va, vb);
  EXPECT_EQ(a.str(), b.str());
}
