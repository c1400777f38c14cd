#pragma once

#include "orbit_braid/artin_rep.hpp"
#include "orbit_braid/braid_word.hpp"
#include "orbit_braid/combing.hpp"
#include "orbit_braid/diagram.hpp"
#include "orbit_braid/errors.hpp"
#include "orbit_braid/free_word.hpp"
#include "orbit_braid/params.hpp"
#include "orbit_braid/random_words.hpp"
#include "orbit_braid/recognition.hpp"
#include "orbit_braid/selftest.hpp"
#include "orbit_braid/text_io.hpp"
#include "orbit_braid/word_problem.hpp"
