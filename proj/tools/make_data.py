#!/usr/bin/env python3
"""Regenerates the bundled data files under data/.

Everything the linter loads at runtime (lexicons, the word-vector file, the
reference corpus for the trigram scorer, prompt templates) is produced here
deterministically, so the whole pipeline stays reproducible without any
model downloads. Run from the repository root:

    python3 tools/make_data.py

The script also prints the reference similarity values that the unit tests
freeze; if you change the vector table, re-run and update the constants the
script reports.
"""

import hashlib
import math
import os
import struct

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "data")

DIM = 64          # total vector width
CURATED_DIMS = 48  # axes 0..47 reserved for the curated clusters
FMT = "%.4f"


# ---------------------------------------------------------------------------
# word bank (base forms)
# ---------------------------------------------------------------------------

NOUNS = """
acid alloy angle animal answer apple area argument arm army array article artist atom average axis
balance ball bank base basis battery beam bear bell bird block blood board boat body bond bone book
bottle box brain branch bread bridge buffer building bus business button calcium camera capital car
carbon card case cat cause cell center century chain chair chapter charge chart chemistry child china
choice circle circuit city class classroom climate clock cloud coast code coin college color column
combination compound computer concept conclusion condition constant continent contrast control copper
core corner country course court cow creature crystal culture current curve cycle data date
day decade decimal definition degree density design desk detail device diagram diamond dictionary
direction disease distance document dog dollar domain door earth economy edge effect egg electron
element end energy engine engineer entry environment enzyme equation error event evidence exam example
experiment expert expression eye face fact factor factory family farm fault feature fence field figure
file fire fish flag floor flower fluid food foot force forest form formula fraction france frequency
friend fruit function galaxy garden gas gene glass goal gold government grade gradient graph grass
gravity group growth habit hand harbor hat head health heart heat height hill history hole home
horse hospital hour house human hydrogen hypothesis ice idea image impact inch index industry
information input insect instance instrument integer interest interval iron island item judge key
kilogram king kitchen knowledge lab label lake language law layer leader leaf league lecture lemon
length lesson letter level library light limit line link lion liquid list liter logic loop machine
magnet magnitude majority mammal map margin market mass material mathematics matrix matter meaning
measure mechanism medium member memory metal meter method midpoint mile milk mind mineral minute model
module molecule moment money month moon morning motion motor mountain mouth movement muscle museum
music nation nature neighbor nerve network news night nitrogen node noise noon north note notebook
notion nucleus number object ocean office oil operation opinion option orbit order organ organism
origin output oxygen page paint pair paper paragraph parent park part particle party path pattern
peak pen pencil people percent period person phase phone photo phrase physics piano picture piece
pipe place plan plane planet plant plastic plate platform player pocket point pole policy population
portion position potential powerhouse power practice pressure price principle problem process product
professor program project proof property proportion protein proton purpose quantity quarter question
queue radius railway rain range rate ratio reaction reason record rectangle region report research
resistance resource response rest result reward ridge ring river road rock role roof room root rope
rule run salt sample sand scale scene schedule school science scientist screen sea season seat second
section sector sediment seed segment semester sense sentence sequence series server service set shape
share sheet shell ship shop side sign signal silver site size skill sky slope smoke software soil
solution sound source south space species speech speed sphere spring square stack staff stage star
statement station statistics stem step stone store storm story stream street strength structure
student study subject substance suburb subway sugar summary summer sun supply surface survey symbol
system table target task teacher team technique technology temperature term test text texture theory
thing threshold tide time tissue title tool topic total town trade train transaction tree triangle
trip truck tube turn type unit universe university usage user valley value vapor variable variance
vector vehicle velocity verb version vertex vessel video village virus vision vocabulary voice
voltage volume vowel water wave weather week weight west wheel window winter wire woman wood word
work worker world writer year zone zoo
""".split()

# nouns that look plural or otherwise must never be singularized
SINGULAR_GUARD = """
physics mathematics statistics news species series class glass grass mass gas bus lens axis basis
analysis thesis crisis focus virus status campus bonus
""".split()

VERBS = """
accept achieve act add adjust admit adopt agree allow analyze announce appear apply argue arrange
arrive ask assess assign assume attach attempt attend avoid balance become begin behave believe belong
bind boil borrow break bring build burn buy calculate call carry catch cause change charge check choose
cite claim classify clean climb close collect combine come compare compile complete compose compute
conclude conduct confirm connect consider consist construct contain continue contrast contribute
convert cook copy correct cost count cover create critique cross cut decide declare decrease deduce
defend define deliver demonstrate denote depend derive describe design detect determine develop devise
differ differentiate discover discuss distinguish divide draw drink drive drop earn eat emit employ
enable end enter establish estimate evaluate examine exceed exchange execute exist expand expect
explain express extend fall fail feed feel fill find finish fit fix flow fold follow force forget form
formulate gain gather generate give grow guess handle happen hear heat help hold identify ignore
illustrate imagine implement imply improve include increase indicate infer inform insert integrate
interpret introduce invent investigate invite involve join judge jump justify keep know label land
laugh lead learn leave lend lift limit list listen live load locate look lose maintain make manage
mark match mean measure meet melt memorize mention merge mix modify move multiply name need notice
observe obtain occur offer open operate order organize paraphrase pass pay perform pick place plan
play plot point pour practice predict prefer prepare present preserve press prevent print produce
propose prove provide publish pull push put quote raise rank reach read recall receive recognize
recommend record reduce refer reflect regard relate release remain remember remove repeat replace
report represent require restate return review revise rise rotate run save say see seem select sell
send serve set shake shape show shrink simplify sing sit sleep solve sort speak spell spend split
spread stand start state stay stop store study submit substitute subtract succeed suggest summarize
supply support suppose swim synthesize take talk teach tell test thank think throw touch train
transfer transform translate travel treat try turn understand use verify visit wait walk want warm
wash watch wear weigh win wonder work write
""".split()

ADJECTIVES = """
able abstract absolute active actual additional advanced alive ancient angry annual apparent average
aware bad basic big binary bitter black blue brief bright broad brown busy calm capable careful
central certain cheap chemical circular civil classical clean clear clever clinical cold common
complete complex constant continuous cool correct critical cubic curious current daily dark decimal
deep dense dependent different difficult digital direct distinct double dry due early economic
effective efficient electric electrical empty entire equal equivalent essential exact excellent
external fair false famous fast final fine finite firm fit flat foreign formal free frequent fresh
full functional general gentle global good gradual gray great green happy hard healthy heavy high
hollow hot huge human hungry ideal identical important independent individual industrial initial
inner internal ionic joint kind large late leading legal light likely linear liquid little local
logical long loud low lower magnetic main major marine maximal maximum mean mechanical medical medium
mental minimal minimum minor mobile moderate modern molecular moral narrow national native natural
nearby neat necessary negative nervous neutral new nice noble normal northern notable nuclear
numerical obvious odd official old open opposite oral ordinary organic original outer overall parallel
partial particular passive past perfect periodic personal physical plain plural polar political poor
popular positive possible practical precise present previous primary prime principal private probable
productive professional proper public pure quick quiet random rapid rare raw ready real recent red
regular related relative reliable remote rich right rough round royal rural sad safe scientific
secondary senior sensitive separate serious severe sharp short significant silent similar simple
single slow small smooth social soft solar solid southern spare spatial special specific stable
standard static statistical steady steep straight strange strict strong subatomic sufficient suitable
sweet symmetric synthetic tall technical temporary thick thin tight tiny total tough traditional
true typical uniform unique upper urban useful usual valid various vertical violet visible visual
vital warm weak western wet white whole wide wild wise wooden wrong yellow young
""".split()

ADVERBS = """
abroad accordingly accurately actually again ahead almost alone already also altogether anywhere
apart approximately away badly barely carefully certainly clearly closely completely constantly
correctly deeply directly downward easily effectively efficiently elsewhere entirely equally
especially essentially eventually everywhere exactly extremely fairly finally firmly forever forward
freely fully further generally gently gradually greatly hardly heavily highly immediately indeed
independently indoors initially instead largely lately later likewise locally loudly mainly maybe
meanwhile merely mostly naturally nearly neatly negatively nevertheless newly nonetheless normally
nowadays obviously originally otherwise outdoors overseas partly perfectly perhaps positively
possibly precisely previously primarily probably properly quickly quietly quite randomly rapidly
rarely rather readily really recently regularly relatively roughly sharply shortly significantly
similarly simply slightly slowly smoothly socially softly solely somewhat soon specifically steadily
still strictly strongly suddenly sufficiently surely therefore thus tightly together tomorrow tonight
totally truly typically ultimately uniformly upward virtually widely yesterday yet
""".split()

# closed classes for the POS lexicon
DETERMINERS = "the a an this that these those each every some any no both either neither another such".split()
PRONOUNS = ("i you he she it we they me him her us them mine yours hers ours theirs myself yourself "
            "himself herself itself ourselves themselves who whom whose what which someone anyone "
            "everyone nobody something anything everything nothing").split()
AUX_VERBS = ("is are was were be been being am do does did done doing have has had having will would "
             "can could shall should may might must").split()
PREP_CONJ = ("of in on at by for with from to into onto as and or but if because while during between "
             "under over about above below after before against up down off until once since through "
             "throughout via per within without across along around behind beside beyond except near "
             "toward towards upon although though unless whether so than out inside outside despite "
             "regarding concerning").split()
WH_ADVERBS = "when where why how".split()

STOPWORDS = sorted(set(
    DETERMINERS + PRONOUNS + AUX_VERBS + PREP_CONJ + WH_ADVERBS +
    "not no nor only just also very too s t own same all most more other some such few then there here "
    "again further i'm it's don't doesn't isn't aren't won't can't".split()
))

IRREGULAR_LEMMAS = {
    "is": "be", "are": "be", "was": "be", "were": "be", "been": "be", "being": "be", "am": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do",
    "goes": "go", "went": "go", "gone": "go",
    "made": "make", "making": "make",
    "said": "say", "says": "say",
    "saw": "see", "seen": "see",
    "took": "take", "taken": "take",
    "gave": "give", "given": "give",
    "found": "find", "got": "get", "gets": "get", "getting": "get",
    "came": "come", "knew": "know", "known": "know",
    "thought": "think", "told": "tell", "became": "become",
    "left": "leave", "felt": "feel", "kept": "keep", "held": "hold",
    "brought": "bring", "began": "begin", "begun": "begin",
    "wrote": "write", "written": "write", "read": "read",
    "ran": "run", "running": "run", "spoke": "speak", "spoken": "speak",
    "stood": "stand", "understood": "understand", "meant": "mean",
    "led": "lead", "grew": "grow", "grown": "grow", "drew": "draw", "drawn": "draw",
    "broke": "break", "broken": "break", "chose": "choose", "chosen": "choose",
    "fell": "fall", "fallen": "fall", "built": "build", "sent": "send", "spent": "spend",
    "lost": "lose", "met": "meet", "paid": "pay", "sold": "sell", "taught": "teach",
    "caught": "catch", "bought": "buy", "sat": "sit", "won": "win", "ate": "eat", "eaten": "eat",
    "children": "child", "men": "man", "women": "woman", "mice": "mouse", "feet": "foot",
    "teeth": "tooth", "people": "person", "geese": "goose", "oxen": "ox", "data": "datum",
    "criteria": "criterion", "phenomena": "phenomenon", "analyses": "analysis", "theses": "thesis",
    "axes": "axis", "bases": "basis", "crises": "crisis", "nuclei": "nucleus", "radii": "radius",
    "media": "medium", "indices": "index", "matrices": "matrix", "vertices": "vertex",
    "better": "good", "best": "good", "worse": "bad", "worst": "bad",
    "lives": "life", "leaves": "leaf", "halves": "half", "shelves": "shelf", "wives": "wife",
}

# extra domain words used by fixtures that are not in the big banks
EXTRA_NOUNS = """
proton neutron electron molecule mitochondria photosynthesis chlorophyll respiration osmosis
distractor stimulus vertebrate mammal reptile amphibian chromosome nucleotide ion isotope
thermometer barometer beaker pendulum projectile francium sodium potassium magnesium zinc nickel
helium neon argon krypton xenon radon oxygen nitrogen hydrogen sulfur phosphorus chlorine
paris london rome berlin madrid tokyo cairo sydney moscow ottawa enzyme substrate catalyst
inflation recession revolution parliament senate congress treaty trial verdict jury
integer numerator denominator quotient remainder median quartile percentile histogram scatterplot
correlation regression intercept residual outlier sampling variance deviation probability sum
h2o co2 dna rna atp
""".split()

EXTRA_VERBS = "lemmatize tokenize annotate flag rank sort hypothesize sketch debug refactor iterate".split()
EXTRA_ADJECTIVES = "charged implausible interrogative declarative imperative anonymous ambiguous vague flawed plausible".split()

VAGUE_TERMS = "frequently occasionally rarely sometimes often seldom usually commonly generally typically".split()
ABSOLUTE_TERMS = "never always all none every impossible only must".split()
NEGATION_MARKERS = "not except least never false incorrect cannot".split()
NOA_PHRASES = [
    "none of the above",
    "none of these",
    "none of the given",
    "none of the above options",
]
AOTA_PHRASES = [
    "all of the above",
    "all of these",
    "all of the given",
    "all answers are correct",
    "all of the above options",
]

BLOOM_VERBS = {
    0: "define list recall name state identify label recognize select match memorize repeat quote locate".split(),
    1: "explain describe summarize paraphrase interpret classify discuss translate illustrate restate compare".split(),
    2: "apply use solve calculate compute demonstrate implement execute employ practice operate sketch".split(),
    3: "analyze contrast differentiate distinguish examine categorize organize deconstruct infer deduce".split(),
    4: "evaluate justify critique assess judge defend argue appraise recommend rank validate".split(),
    5: "create design construct develop formulate compose invent devise propose synthesize hypothesize".split(),
}


# ---------------------------------------------------------------------------
# curated vector clusters
# ---------------------------------------------------------------------------
# Each curated word is a sparse combination of named axes; axes get distinct
# dimensions inside [0, CURATED_DIMS). Bulk vocabulary lives in the remaining
# dimensions, so curated/bulk cosines are exactly zero.

CURATED = {
    # atomic-physics cluster (drives the chemistry fixtures)
    "proton":      {"atom": 1.0},
    "neutron":     {"atom": 0.60, "x_neutron": 0.80},
    "electron":    {"atom": 0.35, "x_electron": 0.937},
    "particle":    {"atom": 0.80, "x_particle": 0.60},
    "charge":      {"atom": 0.35, "x_charge": 0.937},
    "charged":     {"atom": 0.60, "x_charged": 0.80},
    "subatomic":   {"atom": 0.10, "x_subatomic": 0.995},
    "sum":         {"atom": 0.05, "x_sum": 0.9987},
    "number":      {"atom": 0.10, "x_number": 0.995},
    "discover":    {"atom": 0.05, "x_discover": 0.9987},
    "atom":        {"atom": 0.85, "x_atomword": 0.527},
    "nucleus":     {"atom": 0.65, "x_nucleus": 0.76},
    "ion":         {"atom": 0.70, "x_charge": 0.40, "x_ion": 0.59},
    # water / chemistry formulas
    "water":       {"water": 1.0},
    "h2o":         {"water": 0.97, "x_h2o": 0.2431},
    "liquid":      {"water": 0.62, "x_liquid": 0.785},
    "steam":       {"water": 0.58, "x_steam": 0.815},
    # metals cluster (plausible-distractor sets)
    "iron":        {"metal": 0.78, "x_iron": 0.626},
    "copper":      {"metal": 0.76, "x_copper": 0.65},
    "zinc":        {"metal": 0.74, "x_zinc": 0.673},
    "calcium":     {"metal": 0.72, "x_calcium": 0.694},
    "metal":       {"metal": 0.92, "x_metalword": 0.392},
    # city / geography cluster
    "paris":       {"city": 0.80, "france": 0.45, "x_paris": 0.397},
    "london":      {"city": 0.80, "x_london": 0.60},
    "rome":        {"city": 0.80, "x_rome": 0.60},
    "berlin":      {"city": 0.80, "x_berlin": 0.60},
    "capital":     {"city": 0.72, "x_capital": 0.694},
    "city":        {"city": 0.90, "x_cityword": 0.436},
    "france":      {"france": 0.88, "city": 0.20, "x_france": 0.431},
    # biology cluster
    "photosynthesis": {"plant": 0.75, "x_photo": 0.661},
    "chlorophyll": {"plant": 0.70, "x_chloro": 0.714},
    "plant":       {"plant": 0.90, "x_plantword": 0.436},
    "leaf":        {"plant": 0.66, "x_leaf": 0.751},
    "sunlight":    {"plant": 0.50, "x_sun": 0.866},
    "energy":      {"plant": 0.35, "atom": 0.30, "x_energy": 0.888},
    # animals (off-topic distractor material)
    "dog":         {"animal": 0.82, "x_dog": 0.572},
    "cat":         {"animal": 0.82, "x_cat": 0.572},
    "horse":       {"animal": 0.80, "x_horse": 0.60},
    "animal":      {"animal": 0.93, "x_animalword": 0.368},
}


def sha_rng(key: str):
    """Deterministic float stream in [0,1) derived from a sha256 chain."""
    counter = 0
    while True:
        h = hashlib.sha256(("%s#%d" % (key, counter)).encode("utf-8")).digest()
        for off in range(0, 32, 8):
            (v,) = struct.unpack(">Q", h[off:off + 8])
            yield v / 2.0 ** 64
        counter += 1


def gauss_stream(key: str):
    rng = sha_rng(key)
    while True:
        u1 = next(rng)
        u2 = next(rng)
        if u1 <= 1e-12:
            continue
        r = math.sqrt(-2.0 * math.log(u1))
        yield r * math.cos(2.0 * math.pi * u2)
        yield r * math.sin(2.0 * math.pi * u2)


def normalize(v):
    n = math.sqrt(sum(x * x for x in v))
    if n == 0:
        return v
    return [x / n for x in v]


def build_vectors(all_words):
    axis_index = {}

    def axis(name):
        if name not in axis_index:
            if len(axis_index) >= CURATED_DIMS:
                raise RuntimeError("out of curated axes")
            axis_index[name] = len(axis_index)
        return axis_index[name]

    vectors = {}
    for word, combo in CURATED.items():
        v = [0.0] * DIM
        for name, w in combo.items():
            v[axis(name)] = w
        vectors[word] = normalize(v)

    for word in sorted(all_words):
        if word in vectors:
            continue
        g = gauss_stream("vec:" + word)
        v = [0.0] * DIM
        for d in range(CURATED_DIMS, DIM):
            v[d] = next(g)
        vectors[word] = normalize(v)
    return vectors, axis_index


def quantize(v):
    return [float(FMT % x) for x in v]


def cosine(a, b):
    dot = sum(x * y for x, y in zip(a, b))
    na = math.sqrt(sum(x * x for x in a))
    nb = math.sqrt(sum(x * x for x in b))
    if na == 0 or nb == 0:
        return 0.0
    return dot / (na * nb)


def mean_vec(vectors, words):
    vs = [vectors[w] for w in words if w in vectors]
    if not vs:
        return None
    return [sum(col) / len(vs) for col in zip(*vs)]


def text_sim(vectors, words_a, words_b):
    ma = mean_vec(vectors, words_a)
    mb = mean_vec(vectors, words_b)
    if ma is None or mb is None:
        return 0.0
    return cosine(ma, mb)


def pair_assoc(vectors, stem_lemmas, option_lemmas):
    """Mean pairwise cosine between stem and option lemmas, skipping exact repeats."""
    vals = []
    for s in stem_lemmas:
        if s not in vectors:
            continue
        for o in option_lemmas:
            if o == s or o not in vectors:
                continue
            vals.append(cosine(vectors[s], vectors[o]))
    return sum(vals) / len(vals) if vals else 0.0


# ---------------------------------------------------------------------------
# inflection helpers (rough, only to widen the word list)
# ---------------------------------------------------------------------------

def plural(noun):
    if noun in SINGULAR_GUARD:
        return None
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def verb_forms(verb):
    forms = []
    if verb.endswith(("s", "x", "z", "ch", "sh")):
        forms.append(verb + "es")
    elif verb.endswith("y") and verb[-2] not in "aeiou":
        forms.append(verb[:-1] + "ies")
    else:
        forms.append(verb + "s")
    if verb.endswith("e"):
        forms.append(verb[:-1] + "ing")
        forms.append(verb + "d")
    else:
        forms.append(verb + "ing")
        forms.append(verb + "ed")
    return forms


# ---------------------------------------------------------------------------
# reference corpus for the trigram scorer
# ---------------------------------------------------------------------------

def reference_corpus():
    subjects = ["the student", "the teacher", "a scientist", "the class", "an engineer",
                "the researcher", "a child", "the professor", "the author", "a reader"]
    verbs = ["reads", "writes", "studies", "explains", "measures", "describes", "draws",
             "examines", "records", "reviews"]
    objects = ["the book", "a question", "the answer", "an experiment", "the result",
               "a diagram", "the lesson", "a report", "the problem", "a theory"]
    places = ["in the library", "in the lab", "at school", "in class", "at home",
              "in the museum", "after the lecture", "before the exam", "during the test",
              "in the morning"]
    lines = []
    for i, s in enumerate(subjects):
        for j, v in enumerate(verbs):
            k = (i * 7 + j * 3) % len(objects)
            p = (i * 5 + j) % len(places)
            lines.append("%s %s %s %s ." % (s, v, objects[k], places[p]))
    facts = [
        "water boils at one hundred degrees .",
        "the earth orbits the sun once a year .",
        "a proton carries a positive charge .",
        "an electron carries a negative charge .",
        "plants use sunlight to make food .",
        "the capital of france is paris .",
        "a triangle has three sides .",
        "the heart pumps blood through the body .",
        "sound travels slower than light .",
        "most metals conduct electricity well .",
        "the median is the middle value of a sorted list .",
        "a molecule of water contains two hydrogen atoms .",
        "questions should be clear and focused .",
        "each option should be plausible and distinct .",
        "good answers are short and precise .",
        "the mean of a sample estimates the population mean .",
    ]
    lines.extend(facts * 3)
    return lines


# ---------------------------------------------------------------------------
# prompt templates
# ---------------------------------------------------------------------------

PROMPTS = {
    "answer_0.txt": (
        "You are answering a multiple-choice question. Reply with only the letter of the "
        "single best option.\n\nQuestion: {stem}\n{options}\nAnswer:"
    ),
    "answer_1.txt": (
        "Read the question and the options, then state the single best option letter in "
        "parentheses, for example (A).\n\n{stem}\n{options}"
    ),
    "answer_2.txt": (
        "{stem}\n{options}\n\nWhich option is correct? Respond with exactly one letter "
        "from A to E."
    ),
    "verify_absolute_terms.txt": (
        "A quality reviewer flagged an absolute term in this multiple-choice question.\n\n"
        "Question: {stem}\n{options}\n\nFlagged text: {evidence}\n\n"
        "Does the flagged term work as an absoluteness cue that a test-wise student could "
        "exploit (rather than an ordinary use of the word)? Answer Yes or No."
    ),
    "verify_more_than_one_correct.txt": (
        "Consider this multiple-choice question.\n\nQuestion: {stem}\n{options}\n\n"
        "Context: {evidence}\n\n"
        "Could more than one of the options be defended as a correct answer, or is this a "
        "select-all-that-apply item? Answer Yes or No."
    ),
    "verify_complex_k_type.txt": (
        "Consider this multiple-choice question.\n\nQuestion: {stem}\n{options}\n\n"
        "Flagged pattern: {evidence}\n\n"
        "Do the options ask the student to pick between combinations of other responses "
        "(a K-type item)? Answer Yes or No."
    ),
    "verify_gratuitous_information.txt": (
        "Consider this multiple-choice question.\n\nQuestion: {stem}\n{options}\n\n"
        "Candidate sentence: {evidence}\n\n"
        "Is that sentence unnecessary for answering the question? Answer Yes or No."
    ),
    "verify_unfocused_stem.txt": (
        "Consider this question stem on its own, without the options.\n\nStem: {stem}\n\n"
        "Options (for reference only):\n{options}\n\nNote: {evidence}\n\n"
        "Is the stem too unfocused to be understood and answered without reading the "
        "options? Answer Yes or No."
    ),
    "verify_convergence_cues.txt": (
        "Consider this multiple-choice question.\n\nQuestion: {stem}\n{options}\n\n"
        "Component counts: {evidence}\n\n"
        "Do the options converge on the correct answer, so that picking the components "
        "that appear most often identifies it? Answer Yes or No."
    ),
}


def write_lines(path, lines):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(line + "\n")


def main():
    nouns = sorted(set(NOUNS + EXTRA_NOUNS))
    verbs = sorted(set(VERBS + EXTRA_VERBS))
    adjectives = sorted(set(ADJECTIVES + EXTRA_ADJECTIVES))
    adverbs = sorted(set(ADVERBS + VAGUE_TERMS))

    dictionary = {}
    for w in nouns:
        dictionary[w] = "NOUN"
    for w in verbs:
        dictionary.setdefault(w, "VERB")
    for w in adjectives:
        dictionary.setdefault(w, "ADJ")
    for w in adverbs:
        dictionary.setdefault(w, "ADV")

    # every surface form we consider spelled correctly
    forms = set(dictionary)
    forms.update(DETERMINERS + PRONOUNS + AUX_VERBS + PREP_CONJ + WH_ADVERBS)
    forms.update(IRREGULAR_LEMMAS.keys())
    forms.update(IRREGULAR_LEMMAS.values())
    forms.update(ABSOLUTE_TERMS + NEGATION_MARKERS + VAGUE_TERMS)
    for n in nouns:
        p = plural(n)
        if p:
            forms.add(p)
    for v in verbs:
        forms.update(verb_forms(v))

    vectors_raw, axes = build_vectors(forms)
    vectors = {w: quantize(v) for w, v in vectors_raw.items()}

    # --- lexicons ---
    lex = os.path.join(DATA, "lexicons")
    write_lines(os.path.join(lex, "stopwords.txt"), STOPWORDS)
    write_lines(os.path.join(lex, "absolute_terms.txt"), ABSOLUTE_TERMS)
    write_lines(os.path.join(lex, "vague_terms.txt"), VAGUE_TERMS)
    write_lines(os.path.join(lex, "negation_markers.txt"), NEGATION_MARKERS)
    write_lines(os.path.join(lex, "noa_phrases.txt"), NOA_PHRASES)
    write_lines(os.path.join(lex, "aota_phrases.txt"), AOTA_PHRASES)
    write_lines(os.path.join(lex, "bloom_verbs.csv"),
                ["verb,level"] + ["%s,%d" % (v, lvl) for lvl in sorted(BLOOM_VERBS)
                                  for v in sorted(BLOOM_VERBS[lvl])])
    write_lines(os.path.join(lex, "dictionary.tsv"),
                ["%s\t%s" % (w, t) for w, t in sorted(dictionary.items())])
    write_lines(os.path.join(lex, "irregular_lemmas.tsv"),
                ["%s\t%s" % (k, v) for k, v in sorted(IRREGULAR_LEMMAS.items())])
    write_lines(os.path.join(lex, "verbs.txt"), verbs)
    write_lines(os.path.join(lex, "wordlist.txt"), sorted(forms))

    # --- vectors ---
    vec_path = os.path.join(DATA, "embeddings", "vectors.txt")
    os.makedirs(os.path.dirname(vec_path), exist_ok=True)
    with open(vec_path, "w", encoding="utf-8") as f:
        f.write("%d %d\n" % (len(vectors), DIM))
        for w in sorted(vectors):
            f.write(w + " " + " ".join(FMT % x for x in vectors[w]) + "\n")

    # --- corpus + prompts ---
    write_lines(os.path.join(DATA, "corpus", "reference_sentences.txt"), reference_corpus())
    for name, text in PROMPTS.items():
        path = os.path.join(DATA, "prompts", name)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text + "\n")

    # --- frozen reference values (computed from the quantized, shipped table) ---
    q = vectors
    print("words in table: %d, dim %d, curated axes used: %d" % (len(q), DIM, len(axes)))

    def rep(label, val):
        print("%-58s %.10f" % (label, val))

    # content lemmas of the four option texts and stem of the chemistry sample
    stem = ["proton"]
    opt_a = ["charged", "particle"]
    opt_b = ["sum", "number", "proton", "neutron"]
    opt_c = ["charged", "subatomic", "particle"]
    opt_d = ["discover", "charge", "electron"]

    rep("sim(optA, optC)  [positively.. vs negatively..]", text_sim(q, opt_a, opt_c))
    rep("sim(optD, optA)", text_sim(q, opt_d, opt_a))
    rep("sim(optB, optA)", text_sim(q, opt_b, opt_a))
    rep("sim(optC, optA)", text_sim(q, opt_c, opt_a))
    rep("assoc(stem, A)", pair_assoc(q, stem, opt_a))
    rep("assoc(stem, B)", pair_assoc(q, stem, opt_b))
    rep("assoc(stem, C)", pair_assoc(q, stem, opt_c))
    rep("assoc(stem, D)", pair_assoc(q, stem, opt_d))
    rep("cos(h2o, water)", cosine(q["h2o"], q["water"]))
    rep("cos(proton, particle)", cosine(q["proton"], q["particle"]))
    rep("cos(proton, neutron)", cosine(q["proton"], q["neutron"]))
    rep("sim([capital,france],[paris])",
        text_sim(q, ["capital", "france"], ["paris"]))
    rep("sim([capital,france],[dog])", text_sim(q, ["capital", "france"], ["dog"]))
    rep("sim([iron],[copper])", text_sim(q, ["iron"], ["copper"]))
    rep("sim([iron],[dog])", text_sim(q, ["iron"], ["dog"]))
    rep("assoc([photosynthesis],[chlorophyll,plant])",
        pair_assoc(q, ["photosynthesis"], ["chlorophyll", "plant"]))
    rep("assoc([photosynthesis],[iron,zinc])",
        pair_assoc(q, ["photosynthesis"], ["iron", "zinc"]))
    rep("assoc([photosynthesis],[dog,horse])",
        pair_assoc(q, ["photosynthesis"], ["dog", "horse"]))

    # sanity checks the detectors rely on
    assert cosine(q["proton"], q["particle"]) > 0.75
    assert cosine(q["proton"], q["subatomic"]) < 0.2
    assert text_sim(q, opt_d, opt_a) < 0.37
    a, b, c, d = (pair_assoc(q, stem, o) for o in (opt_a, opt_b, opt_c, opt_d))
    assert a - max(b, c, d) >= 0.17, (a, b, c, d)
    assert a >= 0.60
    assert cosine(q["h2o"], q["water"]) >= 0.955
    assert text_sim(q, opt_a, opt_c) < 0.95
    print("all generator assertions hold")


if __name__ == "__main__":
    main()
