#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <utility>
#include <vector>

namespace testutil {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the installed CLI through the shell. Environment assignments are
// prepended, so they only affect the child.
inline CliResult run_cli(const std::string& args,
                         const std::vector<std::pair<std::string, std::string>>& env = {}) {
    static int counter = 0;
    std::string base = "/tmp/synex_cli_" + std::to_string(::getpid()) + "_" +
                       std::to_string(counter++);
    std::string out_path = base + ".out";
    std::string err_path = base + ".err";

    std::string cmd;
    for (const auto& [key, value] : env) cmd += key + "='" + value + "' ";
    cmd += std::string(SYNEX_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;

    int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

} // namespace testutil
