#include <gtest/gtest.h>

#include <sstream>

#include "eqpush/commands.hpp"

namespace eqpush {
namespace {

struct Captured {
  int code;
  std::string out;
};

template <class Cmd>
Captured run(Cmd cmd, const Request& req) {
  std::ostringstream os;
  int code = cmd(req, os);
  return {code, os.str()};
}

Request push_request(SpaceKind kind, std::size_t n, std::string_view lambda, Method method = Method::Residue) {
  Request r;
  r.spaces = {kind};
  r.n = n;
  r.lambda = parse_partition(lambda);
  r.method = method;
  return r;
}

TEST(CmdPushforward, AllMethodsAgree) {
  const Captured r = run(cmd_pushforward, push_request(SpaceKind::LG, 2, "2,1", Method::All));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("value: 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("methods agree: yes"), std::string::npos) << r.out;
}

TEST(CmdPushforward, TextOutput) {
  EXPECT_EQ(run(cmd_pushforward, push_request(SpaceKind::LG, 2, "3,1")).out,
            "space: LG(2)\nlambda: 3,1\nvalue: 0\ndecomposition: none\n");
  EXPECT_EQ(run(cmd_pushforward, push_request(SpaceKind::OGodd, 1, "3")).out,
            "space: OG(1,3)\nlambda: 3\nvalue: 2*t1^2\nmu: 1\nconstant: 2\n");
  EXPECT_EQ(run(cmd_pushforward, push_request(SpaceKind::LG, 2, "4,1", Method::Closed)).out,
            "space: LG(2)\nlambda: 4,1\nvalue: t1^2 + t2^2\nmu: 1\nconstant: 1\n");
}

TEST(CmdPushforward, AbbvAtGivenPoint) {
  Request req = push_request(SpaceKind::LG, 2, "4,1", Method::Abbv);
  req.t = std::vector<Scalar>{Scalar(1), Scalar(2)};
  const Captured r = run(cmd_pushforward, req);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("point: (1,2)\nvalue: 5\n"), std::string::npos) << r.out;
}

TEST(CmdPushforward, JsonRoundTripsValue) {
  Request req = push_request(SpaceKind::LG, 3, "5,2,1", Method::All);
  req.format = Format::Json;
  const Captured r = run(cmd_pushforward, req);
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["agree"], true);
  const SparsePoly value = poly_from_json(j["value"], 3);
  EXPECT_EQ(value, schur_squared_args({1}, 3));
  EXPECT_EQ(poly_to_json(value).dump(), j["value"].dump());
  EXPECT_EQ(j["decomposition"]["mu"], json::array({1}));
  EXPECT_EQ(j["decomposition"]["constant"], "1");
}

TEST(CmdPushforward, UsageErrors) {
  EXPECT_EQ(run(cmd_pushforward, push_request(SpaceKind::LG, 2, "1,1,1")).code, kExitUsage);
  EXPECT_EQ(run(cmd_pushforward, push_request(SpaceKind::LG, 9, "1")).code, kExitUsage);
  Request none = push_request(SpaceKind::LG, 2, "1");
  none.spaces.clear();
  EXPECT_EQ(run(cmd_pushforward, none).code, kExitUsage);
  Request bad_point = push_request(SpaceKind::LG, 2, "1", Method::Abbv);
  bad_point.t = std::vector<Scalar>{Scalar(1), Scalar(-1)};
  EXPECT_EQ(run(cmd_pushforward, bad_point).code, kExitUsage);
}

TEST(CmdSchur, Examples) {
  Request req;
  req.lambda = parse_partition("2,1");
  req.n = 2;
  EXPECT_EQ(run(cmd_schur, req).out, "z1^2*z2 + z1*z2^2\n");
  req.lambda = parse_partition("1");
  req.n = 3;
  EXPECT_EQ(run(cmd_schur, req).out, "z1 + z2 + z3\n");
  req.lambda = parse_partition("0");
  req.n = 2;
  EXPECT_EQ(run(cmd_schur, req).out, "1\n");
}

TEST(CmdSchur, ConstructionsAgree) {
  Request req;
  req.lambda = parse_partition("3,1");
  req.n = 3;
  const std::string bi = run(cmd_schur, req).out;
  req.construction = SchurConstruction::Tableaux;
  EXPECT_EQ(run(cmd_schur, req).out, bi);
  req.construction = SchurConstruction::JacobiTrudi;
  EXPECT_EQ(run(cmd_schur, req).out, bi);
  req.n = 1;
  EXPECT_EQ(run(cmd_schur, req).code, kExitUsage);
}

TEST(CmdVerify, SmallRangeAgrees) {
  Request req;
  req.n_max = 3;
  req.weight_max = 9;
  const Captured r = run(cmd_verify, req);
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("all cases agree"), std::string::npos);
}

TEST(CmdVerify, RankOneIncludesCube) {
  Request req;
  req.n_max = 1;
  req.weight_max = 3;
  req.format = Format::Json;
  const Captured r = run(cmd_verify, req);
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  bool found = false;
  for (const auto& c : j["cases"])
    if (c["space"] == "lg" && c["lambda"] == json::array({3})) {
      found = true;
      EXPECT_EQ(c["value_text"], "t1^2");
      EXPECT_EQ(c["ok"], true);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["og_even_constants"]["1"], "1");
}

TEST(CmdVerify, InjectedFaultFails) {
  Request req;
  req.n_max = 2;
  req.weight_max = 4;
  req.inject_fault = true;
  EXPECT_EQ(run(cmd_verify, req).code, kExitMismatch);
}

TEST(CmdVerify, ReportsMeasuredOgEvenConstant) {
  Request req;
  req.spaces = {SpaceKind::OGeven};
  req.n_max = 4;
  req.weight_max = 8;
  req.trials = 1;
  req.format = Format::Json;
  const Captured r = run(cmd_verify, req);
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["og_even_constants"]["2"], "2");
  EXPECT_EQ(j["og_even_constants"]["3"], "4");
  EXPECT_EQ(j["og_even_constants"]["4"], "8");
}

TEST(CmdTable, LagrangianRankTwo) {
  Request req;
  req.spaces = {SpaceKind::LG};
  req.n = 2;
  req.weight_max = 5;
  const Captured r = run(cmd_table, req);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "space,n,lambda,mu,constant,value");
  EXPECT_NE(r.out.find("lg,2,\"2,1\",\"0\",1,\"1\"\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lg,2,\"4,1\",\"1\",1,\"t1^2 + t2^2\"\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lg,2,\"3,1\",\"-\",0,\"0\"\n"), std::string::npos) << r.out;
}

TEST(CmdTable, EmptyRangeIsHeaderOnly) {
  Request req;
  req.spaces = {SpaceKind::LG};
  req.n = 2;
  req.weight_min = 5;
  req.weight_max = 4;
  EXPECT_EQ(run(cmd_table, req).out, "space,n,lambda,mu,constant,value\n");
  req.format = Format::Json;
  EXPECT_EQ(run(cmd_table, req).out, "[]\n");
}

TEST(Commands, DeterministicOutput) {
  Request req;
  req.n_max = 2;
  req.weight_max = 6;
  req.seed = 1234;
  req.format = Format::Json;
  EXPECT_EQ(run(cmd_verify, req).out, run(cmd_verify, req).out);
  Request push = push_request(SpaceKind::OGodd, 3, "5,2,1", Method::All);
  push.seed = 77;
  push.format = Format::Json;
  EXPECT_EQ(run(cmd_pushforward, push).out, run(cmd_pushforward, push).out);
}

TEST(Commands, ParseHelpers) {
  EXPECT_EQ(parse_method("all"), Method::All);
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_space_kind("og-even"), SpaceKind::OGeven);
  EXPECT_THROW(parse_space_kind("gr"), Error);
  EXPECT_THROW(parse_method("fast"), Error);
  EXPECT_EQ(parse_point("1,-2/3"), (std::vector<Scalar>{Scalar(1), Scalar(-2, 3)}));
  EXPECT_THROW(parse_point("1,,2"), Error);
}

}  // namespace
}  // namespace eqpush
