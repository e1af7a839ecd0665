// Command-line front end; all computation goes through the C API.

#include "pi1.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

const char* const kCommands[] = {
    "coeffs", "hamiltonian", "instanton", "ratio", "borel", "stokes-fit",
    "ode-check", "landscape", "paths", "parametrix-check", "z-expansion",
    "chi-expansion", "reconstruct", "selftest",
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Painleve I transseries asymptotics toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    long digits = 0, terms = 0, x_count = 0, nodes = 0;
    double x_from = 0, x_to = 0, epsilon = 0, delta = 0;
    std::string phi, x, s_minus1, output, out_file;
    std::vector<long> pade_lm;

    app.add_option("--digits", digits, "working decimal digits (>= 15)");
    app.add_option("--terms", terms, "series truncation order N");
    app.add_option("--phi", phi, "angle: radians, or 'pi', '4pi/5', '3pi/5'");
    app.add_option("--x", x, "complex evaluation point 'a+bi'");
    app.add_option("--x-from", x_from, "first sample abscissa");
    app.add_option("--x-to", x_to, "last sample abscissa");
    app.add_option("--x-count", x_count, "sample / grid count");
    app.add_option("--s-minus1", s_minus1, "Stokes multiplier 'a+bi'");
    app.add_option("--pade", pade_lm, "Pade orders L M")->expected(2);
    app.add_option("--epsilon", epsilon, "lateral ray rotation");
    app.add_option("--nodes", nodes, "quadrature / sample node count");
    app.add_option("--delta", delta, "contour radius scale");
    app.add_option("--output", output, "output format: json or csv");
    app.add_option("--out-file", out_file, "write the document to this file");

    for (const char* name : kCommands) app.add_subcommand(name)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();

    std::string params = "{";
    auto need_comma = [&]() { if (params.size() > 1) params += ","; };
    auto put_long = [&](const char* key, long v) {
        need_comma();
        params += std::string("\"") + key + "\":" + std::to_string(v);
    };
    auto put_double = [&](const char* key, double v) {
        need_comma();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        params += std::string("\"") + key + "\":" + buf;
    };
    auto put_text = [&](const char* key, const std::string& v) {
        need_comma();
        params += std::string("\"") + key + "\":\"" + json_escape(v) + "\"";
    };

    if (app.count("--digits")) put_long("digits", digits);
    if (app.count("--terms")) put_long("terms", terms);
    if (app.count("--phi")) put_text("phi", phi);
    if (app.count("--x")) put_text("x", x);
    if (app.count("--x-from")) put_double("x_from", x_from);
    if (app.count("--x-to")) put_double("x_to", x_to);
    if (app.count("--x-count")) put_long("x_count", x_count);
    if (app.count("--s-minus1")) put_text("s_minus1", s_minus1);
    if (app.count("--pade")) {
        need_comma();
        params += "\"pade\":[" + std::to_string(pade_lm[0]) + ","
                + std::to_string(pade_lm[1]) + "]";
    }
    if (app.count("--epsilon")) put_double("epsilon", epsilon);
    if (app.count("--nodes")) put_long("nodes", nodes);
    if (app.count("--delta")) put_double("delta", delta);
    if (app.count("--output")) put_text("output", output);
    params += "}";

    pi1_result* res = nullptr;
    int status = pi1_run(command.c_str(), params.c_str(), &res);
    if (status != PI1_OK) {
        std::cerr << command << ": " << pi1_result_message(res) << "\n";
    }
    const char* doc = pi1_result_output(res);
    if (doc[0] != '\0') {
        if (!out_file.empty()) {
            std::ofstream f(out_file, std::ios::binary);
            if (!f) {
                std::cerr << "cannot open '" << out_file << "'\n";
                pi1_result_free(res);
                return 2;
            }
            f << doc;
        } else {
            std::cout << doc;
        }
    }
    pi1_result_free(res);
    return status;
}
