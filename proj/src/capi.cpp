#include "bti.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "bti/api.hpp"
#include "bti/bubble_tree.hpp"

struct bti_tree {
    bti::BubbleTree tree;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* bti_version(void) { return bti::api_version(); }

void bti_string_free(char* s) { std::free(s); }

int bti_run(const char* command, const char* request_json, char** response) {
    if (!command || !response) return bti::kValidationError;
    std::string out;
    int status;
    try {
        status = bti::run_command(command, request_json ? request_json : "", out);
    } catch (...) {
        status = bti::kInternalError;
        out = "{\"error\":\"internal error\"}";
    }
    *response = dup_string(out);
    return *response ? status : bti::kInternalError;
}

bti_tree* bti_tree_parse(const char* encoding) {
    if (!encoding) return nullptr;
    try {
        return new bti_tree{bti::parse_tree(encoding)};
    } catch (...) {
        return nullptr;
    }
}

void bti_tree_free(bti_tree* t) { delete t; }

char* bti_tree_canonical(const bti_tree* t) {
    if (!t) return nullptr;
    try {
        return dup_string(bti::canonical(t->tree));
    } catch (...) {
        return nullptr;
    }
}

int bti_tree_validate(const bti_tree* t) {
    if (!t) return 0;
    return bti::validate(t->tree).ok ? 1 : 0;
}

long bti_tree_total_weight(const bti_tree* t) {
    return t ? t->tree.total_weight() : 0;
}

bti_tree* bti_tree_contract(const bti_tree* t, int parent, int child) {
    if (!t) return nullptr;
    try {
        return new bti_tree{bti::contract(t->tree, parent, child)};
    } catch (...) {
        return nullptr;
    }
}

int bti_tree_leq(const bti_tree* t1, const bti_tree* t2) {
    if (!t1 || !t2) return 0;
    try {
        return bti::leq(t1->tree, t2->tree) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

}  // extern "C"
