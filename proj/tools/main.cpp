#include "cli.hpp"

int main(int argc, char** argv) { return relgit::cli::run(argc, argv); }
