#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(BUNMOT_EXE) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) r.out += buf.data();
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string curve(const char* name) { return std::string(" --curve ") + DATA_DIR + "/curves/" + name + ".json"; }

} // namespace

TEST_CASE("quot count and harder") {
    auto r = run("quot count --n 2 --N 2" + curve("p1_f2"));
    CHECK(r.code == 0);
    CHECK(r.out.find("53") != std::string::npos);
    r = run("quot count --n 2 --N 1 --oracle --curve p1_f2");
    CHECK(r.code == 0);
    CHECK(r.out.find('9') != std::string::npos);
    r = run("bun harder --n 2" + curve("p1_f2"));
    CHECK(r.code == 0);
    CHECK(r.out.find("1/3") != std::string::npos);
    r = run("bun harder --n 2 --json" + curve("p1_f2"));
    CHECK(r.code == 0);
    CHECK(r.out.find("\"1/3\"") != std::string::npos);
    CHECK_NOTHROW((void)nlohmann::json::parse(r.out));
}

TEST_CASE("other subcommands run") {
    CHECK(run("curve validate" + curve("ell_f2")).code == 0);
    CHECK(run("count sym --j 2 --curve ell_f2").out.find('9') != std::string::npos);
    CHECK(run("quot strata --n 2 --N 2 --curve p1_f2").code == 0);
    CHECK(run("bun bd --n 2 --g 0 --trunc 6").code == 0);
    CHECK(run("bun conjecture --n 2 --g 1 --trunc 6").code == 0);
    CHECK(run("bun convergence --n 2 --d 0 --lmax 3 --curve p1_f2").out.find("1173/4096") != std::string::npos);
    CHECK(run("hn enumerate --n 2 --d 0 --mu-max 2").code == 0);
    CHECK(run("hn audit --n 2 --d 0 --mu-max 2 --g 1").code == 0);
    CHECK(run("eval \"BGmC\" --realize --trunc 5 --curve p1_f2").code == 0);
    CHECK(run("eval \"Jac*BGm\" --g 1 --vd 0:10").code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("quot count --n 2").code == 2);
    CHECK(run("eval \"Z()\"").code == 2);
    CHECK(run("eval \"Jac\"").code == 2);
    CHECK(run("quot count --n 2 --N 2 --curve no_such_curve").code == 3);
    CHECK(run("bun harder --n -1 --curve p1_f2").code == 2);
    CHECK(run("bun convergence --n 2 --d 5 --lmax 3 --curve p1_f2").code == 3);
}
