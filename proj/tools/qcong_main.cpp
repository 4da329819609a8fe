#include "qcong/cli.hpp"

int main(int argc, char** argv) { return qcong::cli::run(argc, argv); }
