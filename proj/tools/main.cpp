#include "alphapart_cli.hpp"

int main(int argc, char** argv) { return alphapart::cli::main_impl(argc, argv); }
