#include "qtraj/cli.hpp"

int main(int argc, char** argv) { return qtraj::cli::run(argc, argv); }
