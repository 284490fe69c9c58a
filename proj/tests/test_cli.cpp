#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "hly/cli.hpp"

using namespace hly;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (std::filesystem::path(HLY_DATA_DIR) / name).string(); }

}  // namespace

TEST(Cli, CheckHlyPasses) {
  const Outcome r = run({"check", "catalog:sly12_lambda", "--profile", "hly"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, CheckLyReportsResidual) {
  const Outcome r = run({"check", "catalog:sly12_lambda", "--profile", "ly", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  bool found = false;
  for (const auto& v : j["violations"]) {
    if (v["identity"] != "SLY3" || v["tuple"] != json::array({"H", "Y", "X"})) continue;
    ASSERT_EQ(v["residual"].size(), 1u);
    EXPECT_EQ(v["residual"][0]["basis"], "H");
    EXPECT_EQ(v["residual"][0]["coeff"], "(2-2*l^4)/l^2");
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Cli, CheckAtPoint) {
  EXPECT_EQ(run({"check", "catalog:sly12_lambda", "--profile", "ly", "--at", "l=1"}).code, 0);
  const Outcome two = run({"check", "catalog:sly12_lambda", "--profile", "ly", "--at", "l=2", "--format", "json"});
  EXPECT_EQ(two.code, 1);
  const json j = json::parse(two.out);
  bool found = false;
  for (const auto& v : j["violations"])
    if (v["identity"] == "SLY3" && v["tuple"] == json::array({"H", "Y", "X"})) {
      EXPECT_EQ(v["residual"][0]["coeff"], "-15/2");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, PoleIsInputError) {
  const Outcome r = run({"check", "catalog:sly12_lambda", "--at", "l=0", "--format", "json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["error"], "PoleError");
}

TEST(Cli, MaxViolations) {
  const Outcome r = run({"check", "catalog:sly12_lambda", "--profile", "ly", "--format", "json", "--max-violations", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["violations"].size(), 3u);
}

TEST(Cli, ExitCodeDependsOnReportOnly) {
  const Outcome t = run({"check", "catalog:sly12_lambda", "--profile", "ly", "--max-violations", "0"});
  EXPECT_EQ(t.code, 1);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"check", data("conflict.json")}).code, 2);
  EXPECT_EQ(run({"check", data("empty_ops.json")}).code, 2);
  EXPECT_EQ(run({"check", data("bad_coeff.json"), "--format", "json"}).code, 2);
  EXPECT_EQ(run({"check", "catalog:nope"}).code, 2);
  EXPECT_EQ(run({"check", "catalog:osp12", "--profile", "weird"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "catalog:osp12", "--profile", "hly"}).code, 2);
}

TEST(Cli, DocumentFile) {
  EXPECT_EQ(run({"check", data("osp12.json"), "--profile", "lie"}).code, 0);
  EXPECT_EQ(run({"check", data("osp12.json"), "--profile", "hom-assoc"}).code, 1);
}

TEST(Cli, TwistWritesDocument) {
  const Outcome r = run({"twist", "catalog:sly31", "--by", "catalog:alpha1?a=1&b=1&c=3", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Algebra t = load_text(r.out);
  EXPECT_TRUE(check_hly(t).passed());
  const auto path = std::filesystem::temp_directory_path() / "hly_cli_twist.json";
  const Outcome w = run({"twist", "catalog:sly31", "--by", data("alpha1_113.json"), "--out", path.string()});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(run({"check", path.string(), "--profile", "hly"}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, TwistPreconditionFailure) {
  const Outcome r = run({"twist", "catalog:sly31", "--by", "catalog:alpha1?a=2", "--format", "json"});
  EXPECT_EQ(r.code, 3);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["error"], "NotEndomorphism");
  EXPECT_FALSE(j["report"]["passed"].get<bool>());
  const std::string count = "(" + std::to_string(j["report"]["violations"].size()) + " violations)";
  EXPECT_NE(j["message"].get<std::string>().find(count), std::string::npos) << j["message"];
}

TEST(Cli, Derive) {
  const Outcome r = run({"derive", "catalog:sly12_lambda?l=2", "--n", "2", "--kind", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(check_hly(load_text(r.out)).passed());
  const Outcome b = run({"derive", "catalog:osp12_lambda", "--n", "1", "--kind", "binary"});
  ASSERT_EQ(b.code, 0);
  EXPECT_TRUE(check_hom_lie(load_text(b.out)).passed());
  EXPECT_EQ(run({"derive", "catalog:osp12", "--kind", "ternary"}).code, 2);
  EXPECT_EQ(run({"derive", "catalog:osp12", "--kind", "sideways"}).code, 2);
}

TEST(Cli, Construct) {
  const Outcome c = run({"construct", "supercommutator", "catalog:m11_assoc"});
  ASSERT_EQ(c.code, 0);
  EXPECT_TRUE(check_lie(load_text(c.out)).passed());
  const Outcome s = run({"construct", "sts", "catalog:osp12"});
  ASSERT_EQ(s.code, 0);
  EXPECT_TRUE(check_sts(load_text(s.out)).passed());
  const Outcome h = run({"construct", "hly-from-homlie", "catalog:osp12_lambda"});
  ASSERT_EQ(h.code, 0);
  EXPECT_TRUE(check_hly(load_text(h.out)).passed());
  const Outcome m = run({"construct", "ly-from-malcev", "catalog:osp12"});
  ASSERT_EQ(m.code, 0);
  EXPECT_TRUE(check_ly(load_text(m.out)).passed());
  EXPECT_EQ(run({"construct", "ly-from-malcev", "catalog:osp12_lambda"}).code, 3);
  EXPECT_EQ(run({"construct", "hly-from-homlie", "catalog:m11_assoc"}).code, 3);
}

TEST(Cli, CrossCheck) {
  EXPECT_EQ(run({"cross-check", "osp12_lambda"}).code, 0);
  const Outcome r = run({"cross-check", "sly12_lambda", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out)["agree"].get<bool>());
  EXPECT_EQ(run({"cross-check", "m11_assoc"}).code, 3);
  EXPECT_EQ(run({"cross-check", "catalog:sly31_alpha1?a=1"}).code, 0);
  EXPECT_EQ(run({"cross-check", "sly31_alpha1"}).code, 1);
}

TEST(Cli, Catalog) {
  const Outcome list = run({"catalog", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("sly12_lambda"), std::string::npos);
  const Outcome lj = run({"catalog", "list", "--format", "json"});
  EXPECT_EQ(json::parse(lj.out).size(), list_entries().size());
  const Outcome show = run({"catalog", "show", "osp12", "--format", "json"});
  EXPECT_EQ(show.code, 0);
  EXPECT_TRUE(check_lie(load_text(show.out)).passed());
  const Outcome map = run({"catalog", "show", "catalog:alpha2?b=1", "--format", "json"});
  EXPECT_EQ(map.code, 0);
  EXPECT_EQ(json::parse(map.out)["name"], "alpha2");
  EXPECT_EQ(run({"catalog", "show", "nothing"}).code, 2);
}

TEST(Cli, FormatBeforeSubcommand) {
  const Outcome r = run({"--format", "json", "check", "catalog:osp12", "--profile", "lie"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["passed"].get<bool>());
}
