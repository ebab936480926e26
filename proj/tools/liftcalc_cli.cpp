#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "liftcalc/io/batch.hpp"

int main(int argc, char** argv) {
    CLI::App app{"liftcalc: batch calculator for local and global lift parameters"};
    std::string input = "-";
    std::string output = "-";
    bool schema = false;
    liftcalc::io::BatchOptions opt;

    app.add_option("input", input, "request file (JSON Lines or a JSON array); '-' reads standard input");
    app.add_option("-o,--output", output, "response file; '-' writes standard output");
    app.add_flag("--schema", schema, "print the request schema and exit");
    app.add_flag("--trace", opt.trace, "include basis traces and derivation detail");
    app.add_option("-j,--threads", opt.threads, "worker threads (0 = hardware concurrency)");
    CLI11_PARSE(app, argc, argv);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (output != "-") {
        file.open(output, std::ios::binary);
        if (!file) {
            std::cerr << "liftcalc: cannot open output '" << output << "'\n";
            return 2;
        }
        out = &file;
    }

    if (schema) {
        *out << liftcalc::io::request_schema().dump(2) << '\n';
        return 0;
    }

    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) {
            std::cerr << "liftcalc: cannot open input '" << input << "'\n";
            return 2;
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }

    auto responses = liftcalc::io::run_batch(liftcalc::io::split_documents(text), opt);
    bool all_ok = true;
    for (const auto& r : responses) {
        all_ok = all_ok && r["status"] == "ok";
        *out << liftcalc::io::serialize(r) << '\n';
    }
    out->flush();
    return all_ok ? 0 : 1;
}
