// Replays each golden file's command line against the CLI binary and
// byte-compares stdout. First file line: "# cmd: <arguments>".

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string run_command(const std::string& cmd)
{
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
        out.append(buf, n);
    pclose(pipe);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: golden_runner <cli> <golden-dir>\n";
        return 1;
    }
    std::string cli = argv[1];
    std::filesystem::path dir = argv[2];
    int failures = 0, total = 0;
    std::vector<std::filesystem::path> files;
    for (auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        std::ifstream in(file);
        std::string first;
        std::getline(in, first);
        const std::string tag = "# cmd: ";
        if (first.rfind(tag, 0) != 0) {
            std::cerr << "skip " << file.filename() << ": no command line\n";
            ++failures;
            continue;
        }
        std::string args = first.substr(tag.size());
        std::stringstream expected;
        expected << in.rdbuf();
        std::string actual = run_command(cli + " " + args + " 2>/dev/null");
        ++total;
        if (actual == expected.str()) {
            std::cout << "ok   " << file.filename().string() << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << file.filename().string() << "\n";
            std::cout << "--- expected ---\n" << expected.str();
            std::cout << "--- actual ---\n" << actual;
        }
    }
    std::cout << total - failures << "/" << total << " golden files match\n";
    return failures == 0 ? 0 : 1;
}
