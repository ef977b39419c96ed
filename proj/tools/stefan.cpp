#include "stefan/cli/run.hpp"

int main(int argc, char** argv) { return stefan::cli::main(argc, argv); }
