#include "pi1.h"

#include "cmd/commands.hpp"

#include <new>
#include <stdexcept>
#include <string>

struct pi1_result {
    std::string output;
    std::string message;
    int status = PI1_OK;
};

extern "C" {

int pi1_run(const char* command, const char* params_json, pi1_result** out) {
    if (out == nullptr) return PI1_ERR_USAGE;
    *out = nullptr;
    auto* r = new (std::nothrow) pi1_result;
    if (r == nullptr) return PI1_ERR_COMPUTE;
    *out = r;

    if (command == nullptr) {
        r->status = PI1_ERR_USAGE;
        r->message = "command must not be null";
        return r->status;
    }
    try {
        pi1::CommandResult cr =
            pi1::run_command(command, params_json ? params_json : "");
        r->output = std::move(cr.output);
        r->status = cr.status == 0 ? PI1_OK : PI1_ERR_COMPUTE;
        if (cr.status != 0) r->message = "selftest reported failures";
    } catch (const std::invalid_argument& e) {
        r->status = PI1_ERR_USAGE;
        r->message = e.what();
    } catch (const std::exception& e) {
        r->status = PI1_ERR_COMPUTE;
        r->message = e.what();
    }
    return r->status;
}

int pi1_result_status(const pi1_result* r) {
    return r ? r->status : PI1_ERR_USAGE;
}

const char* pi1_result_output(const pi1_result* r) {
    return r ? r->output.c_str() : "";
}

const char* pi1_result_message(const pi1_result* r) {
    return r ? r->message.c_str() : "";
}

void pi1_result_free(pi1_result* r) { delete r; }

const char* pi1_version(void) { return "1.0.0"; }

} // extern "C"
