#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

const char* binary_path() {
    const char* bin = std::getenv("GINFER_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "GINFER_BIN must point at the ginfer binary");
    return bin;
}

// Scratch directory per process run; files are small and overwritten
// freely between cases.
const fs::path& scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "ginfer_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    const fs::path out_path = scratch() / "stdout.txt";
    const fs::path err_path = scratch() / "stderr.txt";
    const std::string cmd = std::string("\"") + binary_path() + "\" " + args + " > \"" +
                            out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

fs::path users_3() {
    const fs::path p = scratch() / "users3.tsv";
    write_file(p, "u1\tanna77\tF\nu2\txrobertx\tM\nu3\tqq12\tU\n");
    return p;
}

fs::path female_list() {
    const fs::path p = scratch() / "female.txt";
    write_file(p, "anna\nbert\n");
    return p;
}

fs::path male_list() {
    const fs::path p = scratch() / "male.txt";
    write_file(p, "robert\nmax\n");
    return p;
}

// 10 labeled users, none of which any list term matches.
fs::path users_fallback_70_30() {
    const fs::path p = scratch() / "users_fb.tsv";
    std::ostringstream text;
    for (int i = 0; i < 7; ++i)
        text << "f" << i << "\tzz" << i << "\tF\n";
    for (int i = 0; i < 3; ++i)
        text << "m" << i << "\tqq" << i << "\tM\n";
    write_file(p, text.str());
    return p;
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n')
            ++lines;
    return lines;
}

}  // namespace

TEST_CASE("classify writes one row per user and exits zero") {
    const auto result = run("classify --users " + users_3().string() +
                            " --female-names " + female_list().string() +
                            " --male-names " + male_list().string() +
                            " --strategy FEMALE_THEN_MALE --seed 7 --format tsv");
    CHECK(result.exit_code == 0);
    CHECK(count_lines(result.out) == 4);  // header + 3 users
    CHECK(result.out.find("u1\tF\tmatched\tanna") != std::string::npos);
    CHECK(result.out.find("u2\tF\tmatched\tbert") != std::string::npos);
    CHECK(result.out.find("u3") != std::string::npos);
}

TEST_CASE("missing users file exits 2 with a file-not-found diagnostic") {
    const fs::path out = scratch() / "never_written.json";
    fs::remove(out);
    const auto result = run("classify --users " + (scratch() / "missing.tsv").string() +
                            " --female-names " + female_list().string() +
                            " --strategy FEMALE_ONLY --out " + out.string());
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("file not found") != std::string::npos);
    CHECK(!fs::exists(out));
}

TEST_CASE("unknown strategy and bad format are usage errors") {
    const auto bad_strategy = run("classify --users " + users_3().string() +
                                  " --female-names " + female_list().string() +
                                  " --strategy NOPE");
    CHECK(bad_strategy.exit_code == 2);
    CHECK(bad_strategy.err.find("NOPE") != std::string::npos);

    const auto bad_format = run("classify --users " + users_3().string() +
                                " --female-names " + female_list().string() +
                                " --strategy FEMALE_ONLY --format xml");
    CHECK(bad_format.exit_code == 2);

    const auto no_sub = run("");
    CHECK(no_sub.exit_code == 2);

    const auto help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("strategy-specific list requirements are enforced") {
    // FEMALE_THEN_MALE without a male list.
    const auto result = run("classify --users " + users_3().string() +
                            " --female-names " + female_list().string() +
                            " --strategy FEMALE_THEN_MALE");
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("--male-names") != std::string::npos);
}

TEST_CASE("evaluate reports the analytic expectation for an all-fallback corpus") {
    const fs::path out = scratch() / "eval.json";
    const auto result = run("evaluate --users " + users_fallback_70_30().string() +
                            " --female-names " + female_list().string() +
                            " --strategy FEMALE_ONLY --prior 0.7 --seed 5 --out " + out.string());
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("strategy=FEMALE_ONLY") != std::string::npos);
    CHECK(result.out.find("n=10") != std::string::npos);
    const std::string report = read_file(out);
    CHECK(report.find("\"expected_accuracy\": 0.58") != std::string::npos);
    CHECK(report.find("\"coverage\": 0.0") != std::string::npos);
    CHECK(report.find("\"matched_accuracy\": null") != std::string::npos);
    CHECK(report.find("\"n_evaluated\": 10") != std::string::npos);
}

TEST_CASE("evaluate with trials adds a monte carlo block") {
    const fs::path out = scratch() / "eval_mc.json";
    const auto result = run("evaluate --users " + users_fallback_70_30().string() +
                            " --female-names " + female_list().string() +
                            " --strategy FEMALE_ONLY --trials 5 --out " + out.string());
    CHECK(result.exit_code == 0);
    const std::string report = read_file(out);
    CHECK(report.find("\"monte_carlo\"") != std::string::npos);
    CHECK(report.find("\"trials\": 5") != std::string::npos);
}

TEST_CASE("evaluate without labels exits 3") {
    const fs::path p = scratch() / "unlabeled.tsv";
    write_file(p, "u1\tabc\tU\nu2\txyz\t\n");
    const auto result = run("evaluate --users " + p.string() +
                            " --female-names " + female_list().string() +
                            " --strategy FEMALE_ONLY");
    CHECK(result.exit_code == 3);
    CHECK(result.err.find("no labeled users") != std::string::npos);
}

TEST_CASE("shadow lists the nested pair once") {
    const auto result = run("shadow --female-names " + female_list().string() +
                            " --male-names " + male_list().string() + " --format tsv");
    CHECK(result.exit_code == 0);
    CHECK(count_lines(result.out) == 2);  // header + bert-in-robert
    CHECK(result.out.find("bert\tFEMALE_NAME\trobert\tMALE_NAME") != std::string::npos);

    const auto no_lists = run("shadow");
    CHECK(no_lists.exit_code == 2);
}

TEST_CASE("sweep prints one row per prior with the formula values") {
    const auto result = run("sweep --users " + users_fallback_70_30().string() +
                            " --female-names " + female_list().string() +
                            " --strategy FEMALE_ONLY --priors 0.5,0.7 --format tsv");
    CHECK(result.exit_code == 0);
    CHECK(count_lines(result.out) == 3);
    CHECK(result.out.find("0.5\t0.5\t") != std::string::npos);
    CHECK(result.out.find("0.7\t0.58\t") != std::string::npos);
}

TEST_CASE("mine surfaces a planted skewed gram") {
    const fs::path p = scratch() / "users_mine.tsv";
    std::ostringstream text;
    for (int i = 0; i < 6; ++i)
        text << "f" << i << "\txx_flor_" << i << "\tF\n";
    for (int i = 0; i < 4; ++i)
        text << "m" << i << "\tzznn" << i << "\tM\n";
    write_file(p, text.str());
    const auto result = run("mine --users " + p.string() +
                            " --min-support 5 --skew 0.8 --format tsv");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("flor\t6\t1.0") != std::string::npos);
}

TEST_CASE("gen produces the exact requested composition") {
    const fs::path out = scratch() / "gen.tsv";
    const auto result = run("gen --n 200 --female-fraction 0.55 --unknown-fraction 0.1 "
                            "--seed 4 --out " + out.string());
    CHECK(result.exit_code == 0);
    const std::string text = read_file(out);
    CHECK(count_lines(text) == 200);
    std::size_t unknown = 0;
    for (std::size_t pos = 0; (pos = text.find("\tU\n", pos)) != std::string::npos; ++pos)
        ++unknown;
    CHECK(unknown == 20);
}

TEST_CASE("gen requires a name list when an embed rate is positive") {
    const auto result = run("gen --n 10 --embed-rate-female 0.5");
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("--female-names") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical files") {
    const fs::path a = scratch() / "rep_a.json";
    const fs::path b = scratch() / "rep_b.json";
    const std::string base = "evaluate --users " + users_3().string() +
                             " --female-names " + female_list().string() +
                             " --male-names " + male_list().string() +
                             " --strategy LONGEST_ACROSS_ALL --seed 9 --trials 3 --out ";
    CHECK(run(base + a.string()).exit_code == 0);
    CHECK(run(base + b.string() + " --threads 4").exit_code == 0);
    const std::string one = read_file(a);
    CHECK(!one.empty());
    CHECK(one == read_file(b));
}

TEST_CASE("the shipped demonstration data works end to end") {
    const char* data_dir = std::getenv("GINFER_DATA_DIR");
    REQUIRE_MESSAGE(data_dir != nullptr, "GINFER_DATA_DIR must point at the data directory");
    const fs::path data(data_dir);
    const auto result = run("evaluate --users " + (data / "demo_users.tsv").string() +
                            " --female-names " + (data / "female_names.txt").string() +
                            " --male-names " + (data / "male_names.txt").string() +
                            " --strategy LONGEST_ACROSS_ALL --seed 7");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("\"n_evaluated\": 8") != std::string::npos);

    const auto stats = run("stats --users " + (data / "demo_users.tsv").string() +
                           " --edges " + (data / "demo_edges.tsv").string());
    CHECK(stats.exit_code == 0);
    CHECK(stats.out.find("\"total_users\": 10") != std::string::npos);
}
