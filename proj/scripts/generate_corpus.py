#!/usr/bin/env python3
"""Regenerates the bundled synthetic corpora under data/.

Reads the evidence vocabularies from profiles/pcs-nlp and verifies that every
mixed-domain item lands in its intended alignment class (aligned, misaligned,
or no-evidence) under the same token-counting rule the router uses. Run from
the repository root:

    python3 scripts/generate_corpus.py
"""

import json
import pathlib
import re
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "corpus"

PREFIX = {
    "machine_learning": "ml",
    "college_computer_science": "cs",
    "professional_psychology": "pp",
    "formal_logic": "fl",
    "econometrics": "ec",
    "clinical_knowledge": "ck",
    "medical_genetics": "mg",
    "professional_law": "pl",
    "philosophy": "ph",
    "european_history": "eh",
}


def tokenize(s):
    return re.findall(r"[a-z0-9]+", s.lower())


def load_vocab():
    profile = json.loads((ROOT / "profiles" / "pcs-nlp").read_text())
    strong = set()
    off = set()
    for domain, words in profile["vocabulary"].items():
        target = strong if domain in profile["strong"] else off
        target.update(words)
    return strong, off


def alignment_class(strong, off, prompt):
    s = sum(1 for t in tokenize(prompt) if t in strong)
    o = sum(1 for t in tokenize(prompt) if t not in strong and t in off)
    if s + o == 0:
        return "no_evidence"
    return "aligned" if s / (s + o + 1) >= 0.5 else "misaligned"


# ---------------------------------------------------------------------------
# Question banks. Each entry: (question, [4 choices], answer_index) and, for
# the mixed domains, the intended alignment class as a fourth field.
# ---------------------------------------------------------------------------

ML = [
    ("Which technique penalizes large weights during training to reduce overfitting in a neural network?", ["L2 regularization", "Label smoothing only", "Removing the test set", "Increasing the learning rate"], 0),
    ("What does the kernel trick let a support vector classifier do?", ["Operate in an implicit high-dimensional feature space", "Avoid any optimization", "Train without labels", "Guarantee zero training error"], 0),
    ("In gradient descent, what does the learning rate control?", ["The step size of each parameter update", "The number of classes", "The size of the dataset", "The entropy of the labels"], 0),
    ("Which quantity does a maximum likelihood estimator maximize?", ["The likelihood of the observed sample", "The prior probability", "The variance of the estimator", "The number of features"], 0),
    ("What is the bias-variance tradeoff about?", ["Balancing underfitting against overfitting", "Choosing between CPUs and GPUs", "Trading speed for memory", "Selecting activation colors"], 0),
    ("Which method groups an unlabeled dataset into k clusters by iteratively updating centroids?", ["k-means clustering", "Logistic regression", "Backpropagation", "Beam search"], 0),
    ("In a classification task, what does a ROC curve plot?", ["True positive rate against false positive rate", "Loss against epochs", "Variance against bias", "Entropy against likelihood"], 0),
    ("What does cross-validation estimate?", ["Generalization performance of a model", "The exact test labels", "The gradient of the loss", "The prior distribution"], 0),
    ("Which of the following is an unsupervised method?", ["Principal component analysis", "Ridge regression", "Perceptron training", "Gradient boosting with labels"], 0),
    ("What problem does vanishing gradient cause in deep neural networks?", ["Early layers learn very slowly", "The dataset shrinks", "Labels become noisy", "The kernel becomes singular"], 0),
    ("Which loss is standard for binary classification with probabilistic outputs?", ["Cross-entropy loss", "Hinge-free absolute loss", "Perplexity", "Cosine distance"], 0),
    ("What does the expectation-maximization procedure alternate between?", ["Computing expected latent assignments and maximizing parameters", "Sorting and searching", "Encoding and decoding text", "Sampling and discarding data"], 0),
    ("A model with high training accuracy and low test accuracy most likely suffers from what?", ["Overfitting", "Underfitting", "Label leakage prevention", "Perfect generalization"], 0),
    ("Which regularizer tends to produce sparse weight vectors?", ["L1 penalty", "L2 penalty", "Dropout on inputs only", "Batch normalization"], 0),
    ("What is the role of a validation set?", ["Selecting hyperparameters without touching the test set", "Replacing the training data", "Computing the final reported score", "Storing mislabeled points"], 0),
    ("In Bayesian inference, what does the posterior combine?", ["Prior beliefs and the likelihood of the data", "Gradients and step sizes", "Features and labels only", "Clusters and centroids"], 0),
    ("How many independent parameters does a conditional probability table need for a binary node with two binary parents in a Bayesian network?", ["4", "8", "2", "6"], 0),
    ("What does boosting do with weak learners?", ["Combines them sequentially, reweighting hard examples", "Deletes them", "Averages their inputs", "Trains them on disjoint labels"], 0),
    ("Which statement describes the curse of dimensionality?", ["Data becomes sparse as feature count grows", "Gradients always explode", "Labels become continuous", "Variance always decreases"], 0),
    ("What does a confusion matrix summarize?", ["Predicted versus actual class counts", "Feature correlations", "Gradient magnitudes", "Cluster diameters"], 0),
    ("Why is feature scaling helpful for distance-based methods?", ["It keeps any single feature from dominating the metric", "It increases the label count", "It removes the need for data", "It guarantees convexity"], 0),
    ("What does the softmax function produce?", ["A probability distribution over classes", "A binary mask", "An unnormalized gradient", "A sorted feature list"], 0),
    ("Which quantity does entropy measure for a discrete distribution?", ["Average uncertainty in the outcomes", "The mean of the outcomes", "The sample size", "The gradient norm"], 0),
    ("What is early stopping used for?", ["Halting training when validation loss stops improving", "Skipping data loading", "Shortening the test set", "Freezing the labels"], 0),
    ("In k-nearest neighbors, what does increasing k generally do?", ["Smooths the decision boundary", "Increases overfitting", "Removes the need for a metric", "Shrinks the dataset"], 0),
    ("What distinguishes generative from discriminative classifiers?", ["Generative models learn the joint distribution of inputs and labels", "Generative models never use probability", "Discriminative models require no labels", "They differ only in speed"], 0),
    ("What does dropout do during neural network training?", ["Randomly silences units to discourage co-adaptation", "Deletes the smallest weights permanently", "Reorders the layers", "Doubles the learning rate"], 0),
    ("Which evaluation is appropriate for a heavily imbalanced classification dataset?", ["Precision and recall", "Accuracy alone", "Mean squared error alone", "Cluster purity"], 0),
    ("What is the main assumption of naive Bayes?", ["Features are conditionally independent given the class", "Labels are continuous", "The prior is uniform", "The variance is zero"], 0),
    ("What does a learning curve plot against training set size?", ["Training and validation performance", "Feature counts", "Class priors", "Batch indices"], 0),
]

CS = [
    ("What is the worst-case time complexity of binary search on a sorted array of n elements?", ["O(log n)", "O(n)", "O(n log n)", "O(1)"], 0),
    ("Which data structure gives O(1) average insertion and lookup by key?", ["Hash table", "Sorted array", "Binary heap", "Linked list"], 0),
    ("What does a deterministic finite automaton recognize?", ["Regular languages", "Context-free languages", "All decidable languages", "Only finite languages"], 0),
    ("In a stack, which element is removed first?", ["The most recently pushed", "The least recently pushed", "The median element", "A random element"], 0),
    ("What does the halting problem show?", ["No algorithm decides halting for all program-input pairs", "All programs halt", "Turing machines cannot loop", "Compilers cannot optimize"], 0),
    ("Which sorting method is stable and runs in O(n log n) worst case?", ["Merge sort", "Quick sort", "Selection sort", "Heap sort"], 0),
    ("What is a loop invariant used for?", ["Proving correctness by induction over iterations", "Speeding up the loop body", "Avoiding recursion", "Reducing cache misses"], 0),
    ("What does a compiler's lexer produce?", ["A stream of tokens", "Machine code", "A parse forest", "An object file"], 0),
    ("Which statement about P and NP is accurate?", ["Every problem in P is also in NP", "NP problems cannot be verified quickly", "P equals NP by definition", "NP contains only sorting problems"], 0),
    ("What is the amortized cost of appending to a dynamic array with doubling?", ["O(1)", "O(log n)", "O(n)", "O(n log n)"], 0),
    ("A dangling pointer refers to what?", ["Memory that has already been freed", "A null literal", "An unsigned integer", "A static global"], 0),
    ("What does a queue guarantee about removal order?", ["First in, first out", "Last in, first out", "Largest first", "Random order"], 0),
    ("Which traversal of a binary search tree yields sorted keys?", ["In-order", "Pre-order", "Post-order", "Level-order"], 0),
    ("What is the purpose of a cache in the memory hierarchy?", ["Exploiting locality to hide main-memory latency", "Replacing the disk", "Storing the compiler", "Encrypting addresses"], 0),
    ("Strong induction differs from ordinary induction in what way?", ["The hypothesis covers all smaller cases, not just the predecessor", "It needs no base case", "It only works for even numbers", "It proves undecidability"], 0),
    ("Which asymptotic bound is tight for the recurrence T(n) = 2T(n/2) + n?", ["Theta(n log n)", "Theta(n)", "Theta(n^2)", "Theta(log n)"], 0),
    ("What hazard arises when two threads update shared state without synchronization?", ["A race condition", "A page fault", "A syntax error", "A cache hit"], 0),
    ("What does operational semantics specify for a programming language?", ["How program states evolve step by step", "Its standard library", "Its license", "Its linker behavior"], 0),
    ("A graph with n vertices and no cycles that is connected must have how many edges?", ["n-1", "n", "n+1", "2n"], 0),
    ("What does two's complement represent?", ["Signed integers in binary", "Floating point fractions", "Unicode text", "Parity bits"], 0),
    ("Which proof technique shows a language is not regular?", ["The pumping lemma", "Gaussian elimination", "Binary search", "Loop unrolling"], 0),
    ("What is tail recursion?", ["A recursive call in the final position, enabling constant-stack execution", "Recursion on linked list tails only", "Recursion without base cases", "Mutual recursion"], 0),
    ("In Big-O notation, what does O(f) bound?", ["Asymptotic growth from above up to constant factors", "Exact running time", "Memory addresses", "The number of registers"], 0),
    ("What does a topological sort of a directed acyclic graph produce?", ["A linear order consistent with all edges", "A minimum spanning tree", "A shortest path", "A maximal clique"], 0),
    ("Which property must a hash function have for a correct hash table?", ["Equal keys hash to equal buckets", "It must be invertible", "It must be monotone", "It must be continuous"], 0),
    ("What does mutual exclusion prevent in concurrency?", ["Two threads being in the critical section at once", "Deadlock in all cases", "Starvation in all cases", "Context switches"], 0),
    ("A Turing machine differs from a finite automaton by having what?", ["An unbounded rewritable tape", "More input symbols", "A faster clock", "A fixed program"], 0),
    ("What is the main idea of divide and conquer?", ["Split the problem, solve subproblems recursively, combine results", "Iterate until timeout", "Cache all answers", "Randomize the input"], 0),
    ("What does referential transparency mean for an expression?", ["It can be replaced by its value without changing behavior", "It compiles without warnings", "It uses no memory", "It always returns zero"], 0),
    ("Which notation describes a lower bound on asymptotic growth?", ["Big-Omega", "Big-O", "Little-o", "Tilde"], 0),
]

# Mixed domains carry an intended alignment class; the generator verifies it.
PSYCH = [
    # 22 misaligned: clinical phrasing, no strong-vocabulary hits.
    ("A client reports persistent worry, restlessness, and sleep difficulty for eight months. Which diagnosis fits best?", ["Generalized anxiety disorder", "Brief adjustment reaction", "Seasonal fatigue", "Ordinary stress"], 0, "misaligned"),
    ("Which therapeutic stance is most associated with building rapport during an initial intake session?", ["Active listening with reflective statements", "Immediate confrontation", "Silent observation only", "Assigning homework first"], 0, "misaligned"),
    ("In psychodynamic therapy, a client redirecting feelings about a parent onto the therapist illustrates what?", ["Transference", "Sublimation", "Habituation", "Projection onto peers"], 0, "misaligned"),
    ("Which disorder involves alternating episodes of elevated mood and depression?", ["Bipolar disorder", "Social phobia", "Panic reaction", "Chronic insomnia"], 0, "misaligned"),
    ("A clinician notices a client's depression co-occurring with substance misuse. What is this pattern called?", ["Comorbid presentation", "Placebo response", "Flooding", "Counterconditioning"], 0, "misaligned"),
    ("Exposure with response prevention is the treatment of choice for which disorder?", ["Obsessive-compulsive disorder", "Dysthymia", "Night terrors", "Mutism"], 0, "misaligned"),
    ("In behavioral therapy, pairing a feared stimulus with relaxation is known as what?", ["Systematic desensitization", "Token economy", "Thought stopping", "Milieu care"], 0, "misaligned"),
    ("Which ethical duty requires a therapist to warn an identifiable third party of a credible threat?", ["Duty to protect", "Informed billing", "Dual relationship rule", "Right to terminate"], 0, "misaligned"),
    ("A psychologist using the DSM is primarily doing what?", ["Classifying a disorder by diagnostic criteria", "Scoring intelligence", "Measuring attachment style", "Ranking therapy brands"], 0, "misaligned"),
    ("Negative reinforcement strengthens behavior by doing what?", ["Removing an aversive consequence", "Adding a reward", "Punishing the response", "Ignoring the response"], 0, "misaligned"),
    ("Which therapy focuses on identifying and restructuring distorted automatic thoughts?", ["Cognitive therapy", "Gestalt chairwork", "Hypnotherapy", "Aromatherapy"], 0, "misaligned"),
    ("A client who cannot recall a traumatic event but shows intact new learning most suggests which disorder?", ["Dissociative amnesia", "Korsakoff pattern", "Normal forgetting", "Malingering by default"], 0, "misaligned"),
    ("What is the primary purpose of a clinical intake interview?", ["Gathering history and presenting concerns to plan treatment", "Billing verification", "Medication dosing", "Legal deposition"], 0, "misaligned"),
    ("Which attachment pattern, observed during a clinical separation procedure, involves avoiding the caregiver?", ["Avoidant attachment", "Secure attachment", "Ambivalent clinging", "Enmeshed play"], 0, "misaligned"),
    ("Counseling that remains deliberately nondirective and client-centered follows whose tradition?", ["Carl Rogers", "John Watson", "Wilhelm Wundt", "Hans Eysenck"], 0, "misaligned"),
    ("A therapist disclosing personal details to meet their own needs violates what?", ["Professional boundaries", "Intake protocol", "Mandated reporting", "Couples format"], 0, "misaligned"),
    ("Classical conditioning explains which clinical phenomenon most directly?", ["Acquired phobic reactions to neutral cues", "Grammar acquisition", "Color vision", "Reflex arcs"], 0, "misaligned"),
    ("Which personality assessment relies on responses to ambiguous inkblots?", ["The Rorschach", "A structured checklist", "A sleep diary", "A mood thermometer"], 0, "misaligned"),
    ("Anhedonia, early waking, and psychomotor slowing most suggest which condition?", ["Major depressive disorder", "Specific phobia", "Tic disorder", "Jet lag"], 0, "misaligned"),
    ("What distinguishes psychotherapy supervision from personal therapy for the trainee?", ["Supervision centers on client care and skill development", "Supervision is always unpaid", "Personal therapy is mandatory weekly", "There is no difference"], 0, "misaligned"),
    ("A token economy on an inpatient unit applies which principle?", ["Operant conditioning", "Observational mimicry", "Psychoanalytic insight", "Crisis debriefing"], 0, "misaligned"),
    ("Which response best describes a therapist's confidentiality duty?", ["Disclosures stay private except for specific safety or legal limits", "Nothing may ever be shared", "Families may always be told", "Records are public"], 0, "misaligned"),
    # 8 aligned: methods phrasing dominated by strong-vocabulary terms.
    ("A researcher reports a correlation of 0.82 between two anxiety scales in a large sample. What does the shared variance suggest about the scales?", ["They largely measure overlapping constructs", "They are unrelated", "One causes the other", "Both are invalid"], 0, "aligned"),
    ("A study fits a regression of symptom scores on treatment hours and checks the variance explained. What does R-squared report?", ["The proportion of outcome variance the model accounts for", "The sample size", "The treatment cost", "The dropout count"], 0, "aligned"),
    ("To compare relapse probability across two therapy arms, a trial estimates the difference with a confidence interval around each sample estimate. The interval width depends mostly on what?", ["Sample size and outcome variance", "The clinic's location", "Therapist seniority", "Session of the day"], 0, "aligned"),
    ("When the distribution of reaction-time scores is heavily skewed, which summary of the sample is most robust?", ["The median", "The mean", "The maximum", "The mode of the tail"], 0, "aligned"),
    ("A prediction model for treatment response is trained on one dataset and evaluated on another. This separation guards against what?", ["Overfitting the training sample", "Ethical drift", "Placebo effects", "Rater fatigue"], 0, "aligned"),
    ("Test-retest reliability is estimated from the correlation between two administrations of the same instrument. High reliability implies what about measurement variance?", ["Error variance is a small share of total variance", "The construct changed", "The sample was biased", "The items leaked"], 0, "aligned"),
    ("In a factorial study of therapy type and session frequency, the interaction term in the regression captures what?", ["Whether one factor's effect depends on the other", "The total cost", "The dropout order", "The sample labels"], 0, "aligned"),
    ("A meta-analysis pools effect sizes weighted by inverse variance across samples. Larger studies receive more weight because of what?", ["Their estimates have lower sampling variance", "They are newer", "They are cheaper", "They use better fonts"], 0, "aligned"),
]

LOGIC = [
    # 26 aligned: notational/shared phrasing dominated by strong vocabulary.
    ("Under the usual boolean semantics, which inference preserves truth in every model: from 'p and q' infer 'p'?", ["It is valid in all models", "Only when q is false", "Only in finite models", "Never"], 0, "aligned"),
    ("A proof by induction over formula structure shows a property holds for every wff. The base case covers what?", ["Atomic formulas", "All theorems", "The empty proof", "Only tautologies"], 0, "aligned"),
    ("In the boolean algebra notation, which identity is correct?", ["p or (p and q) equals p", "p and q equals p or q", "not not p equals not p", "p or q equals not p"], 0, "aligned"),
    ("If a proof derives falsum from the assumption not-p, which inference concludes p?", ["Classical reductio", "Universal instantiation", "Disjunction introduction", "Cut elimination only"], 0, "aligned"),
    ("Which inference pattern matches this model: all F are G; x is F; therefore x is G?", ["Universal syllogism applied to a singular case", "Affirming the consequent", "Denying the antecedent", "Hasty generalization"], 0, "aligned"),
    ("A truth-table proof evaluates a formula in every boolean model. A formula true in all of them is called what?", ["A tautology", "A contradiction", "A contingency", "An axiom scheme"], 0, "aligned"),
    ("In first-order notation, the inference from 'for all x, F(x)' to 'F(c)' for a constant c is called what?", ["Universal instantiation", "Existential generalization", "Modus tollens", "Skolem expansion"], 0, "aligned"),
    ("Which boolean notation expresses exclusive or of p and q?", ["(p or q) and not (p and q)", "p and q", "not p or q", "p if and only if q"], 0, "aligned"),
    ("A sound proof system can derive only formulas true in every model. Soundness is thus a relation between what?", ["Derivability and semantic truth", "Axioms and fonts", "Variables and constants", "Lemmas and corollaries"], 0, "aligned"),
    ("To show an inference invalid, a single counter-model suffices. Which notation describes this model-building refutation?", ["Exhibiting an interpretation where premises hold and the conclusion fails", "Listing more axioms", "Renaming variables", "Citing authority"], 0, "aligned"),
    ("In natural deduction notation, conditional proof discharges what?", ["A temporary assumption", "The final formula", "Every open line", "The rule itself"], 0, "aligned"),
    ("The inference 'if p then q; p; therefore q' is classically valid. Its standard proof label is what?", ["Modus ponens", "Modus tollens", "Constructive dilemma", "Weakening"], 0, "aligned"),
    ("Structural induction on proofs shows admissibility of a rule. The inductive step assumes the property for what?", ["All shorter derivations", "The axioms only", "The final formula", "No cases"], 0, "aligned"),
    ("Which boolean model assignment falsifies 'p implies q'?", ["p true, q false", "p false, q true", "both true", "both false"], 0, "aligned"),
    ("De Morgan duality in boolean notation turns 'not (p and q)' into what?", ["not p or not q", "not p and not q", "p or q", "p and q"], 0, "aligned"),
    ("A set of formulas is satisfiable when some model makes all of them true. Which inference principle links satisfiability of finite subsets to the whole set?", ["Compactness", "Monotonicity", "Idempotence", "Excluded middle"], 0, "aligned"),
    ("In sequent notation, the cut rule combines two derivations through what?", ["A shared intermediate formula", "A fresh variable", "A longer proof", "An empty sequent"], 0, "aligned"),
    ("Which inference is NOT valid in every boolean model?", ["From 'p or q' infer p", "From 'p and q' infer q", "From p infer 'p or q'", "From 'not not p' infer p"], 0, "aligned"),
    ("A proof that a formula and its denial are both derivable shows the proof system is what?", ["Inconsistent", "Complete", "Decidable", "Categorical"], 0, "aligned"),
    ("In modal notation, 'necessarily p' evaluated over Kripke models quantifies over what?", ["Accessible worlds in the model", "All proofs", "All constants", "The empty set"], 0, "aligned"),
    ("Which step turns a semantic entailment claim into a derivability claim via a completeness proof?", ["Every model-valid inference has a formal proof", "Every proof is short", "Models are countable", "Axioms are true"], 0, "aligned"),
    ("The boolean notation 'p if and only if q' is true in a model exactly when what holds?", ["p and q share a truth value", "p is true", "q is false", "Neither is assigned"], 0, "aligned"),
    ("Induction on the length of a derivation is typically used to prove what about a proof system?", ["Admissibility or soundness of rules", "Its popularity", "Its alphabet size", "Its runtime"], 0, "aligned"),
    ("Which inference goes from 'F(c) holds for an arbitrary fresh constant c' to 'for all x, F(x)' in a formal proof?", ["Universal generalization", "Existential instantiation", "Vacuous quantification", "Substitution"], 0, "aligned"),
    ("A formula false in every boolean model of the notation is called what?", ["A contradiction", "A satisfiable form", "A contingent form", "An axiom"], 0, "aligned"),
    ("Skolemization replaces existential quantifiers with function symbols while preserving what property of the model class?", ["Satisfiability", "Validity", "Proof length", "Variable names"], 0, "aligned"),
    # 4 no-evidence: everyday phrasing, zero vocabulary hits anywhere.
    ("Every ticket holder gets a seat. Dana holds a ticket. What certainly follows?", ["Dana gets a seat", "Dana arrives late", "Seats ran out", "Dana sold the ticket"], 0, "no_evidence"),
    ("If it rains, the street gets wet. The street is dry. What must be true?", ["It did not rain", "It rained briefly", "The street is new", "Someone dried it"], 0, "no_evidence"),
    ("No fish can fly. Some pets are fish. What certainly follows?", ["Some pets cannot fly", "All pets can fly", "No pets are fish", "Some fish are not pets"], 0, "no_evidence"),
    ("Either the lamp is on or the room is dark. The room is not dark. What follows?", ["The lamp is on", "The lamp is off", "The room is empty", "Nothing follows"], 0, "no_evidence"),
]

ECON = [
    # 29 aligned: quantitative phrasing dominated by strong vocabulary.
    ("An ordinary least squares regression of wages on schooling gives a slope estimator of 0.08. Holding the model, what does the slope mean?", ["An extra year of schooling predicts 8% higher wages", "Wages cause schooling", "The sample is biased", "The variance is 0.08"], 0, "aligned"),
    ("Why does omitting a variable correlated with a regressor bias the OLS estimator?", ["The error term no longer has zero correlation with the regressor", "The sample shrinks", "The variance becomes zero", "The intercept disappears"], 0, "aligned"),
    ("Under heteroskedasticity, the usual variance formula for the OLS estimator is wrong. Which fix keeps the point estimator but corrects the variance?", ["Robust standard errors", "Dropping half the sample", "Squaring the outcome", "Removing the intercept"], 0, "aligned"),
    ("In a time-series regression, autocorrelation of the errors mainly distorts what?", ["The estimated variance of coefficients", "The sample mean of the regressor", "The data collection", "The currency units"], 0, "aligned"),
    ("An instrumental variable must satisfy two conditions: relevance and what else for consistent estimation?", ["No correlation with the error term", "A large variance", "A normal distribution", "A positive mean"], 0, "aligned"),
    ("A unit root in a series implies which property relevant to regression?", ["Shocks have permanent effects and spurious correlation risk rises", "The sample is small", "The variance is finite and fixed", "Estimation is unaffected"], 0, "aligned"),
    ("Cointegration between two trending series means what for the distribution of their linear combination?", ["Some combination is stationary", "Both are white noise", "Their correlation is zero", "They share no trend"], 0, "aligned"),
    ("In panel data, fixed effects estimation removes what source of bias?", ["Time-invariant unobserved heterogeneity correlated with regressors", "Measurement error in the outcome", "Serial correlation", "Small samples"], 0, "aligned"),
    ("The variance of the sample mean falls at what rate as the sample grows?", ["Proportional to 1/n", "Proportional to n", "It is constant", "Proportional to 1/log n"], 0, "aligned"),
    ("Multicollinearity between regressors inflates what?", ["The variance of individual coefficient estimators", "The sample size", "The R-squared to exactly one", "The intercept only"], 0, "aligned"),
    ("A difference-in-differences estimator compares changes across groups. Its key identifying assumption is what?", ["Parallel trends in the untreated outcome distribution", "Random regressor variance", "Zero inflation", "Balanced panel length"], 0, "aligned"),
    ("If the error distribution has fat tails, which property of the OLS estimator survives under standard assumptions?", ["Unbiasedness", "Normality in small samples", "Minimum possible variance among all estimators", "Exact inference"], 0, "aligned"),
    ("When a regressor is endogenous because of simultaneous causality, which regression estimator restores consistent inference?", ["One using instrumental variables", "More lags of the outcome", "A larger sample alone", "Winsorized outcomes"], 0, "aligned"),
    ("What does the central limit theorem deliver for the distribution of the scaled sample mean?", ["Approximate normality as n grows", "Exact uniformity", "A constant", "Divergence"], 0, "aligned"),
    ("In a log-log regression, the slope estimator measures what?", ["An elasticity: percent change in the outcome per percent change in the regressor", "A level change", "A probability", "A share of variance"], 0, "aligned"),
    ("Measurement error in a regressor typically biases its OLS estimator toward what?", ["Zero (attenuation)", "One", "Infinity", "The sample variance"], 0, "aligned"),
    ("Which diagnostic compares model fit while penalizing extra regressors?", ["An information criterion like AIC or BIC", "The raw R-squared", "The sample mean", "The Durbin ratio alone"], 0, "aligned"),
    ("In a regression with a lagged dependent variable and serially correlated errors, the OLS estimator is what?", ["Inconsistent", "Unbiased", "Efficient", "Exactly normal"], 0, "aligned"),
    ("Clustering standard errors by group addresses correlation of what within clusters?", ["The regression errors", "The regressors' means", "The sample labels", "The fitted intercepts"], 0, "aligned"),
    ("The Gauss-Markov theorem says OLS has the smallest variance among which class of estimators?", ["Linear unbiased estimators under the classical assumptions", "All estimators of any form", "Maximum likelihood estimators", "Bayesian posteriors"], 0, "aligned"),
    ("Weak instruments cause which problem for the IV estimator's distribution?", ["Severe small-sample bias and unreliable inference", "Perfect efficiency", "Exact unbiasedness", "No effect"], 0, "aligned"),
    ("In forecasting, the out-of-sample prediction error is preferred to in-sample fit because it guards against what?", ["Overfitting the estimation sample", "Stationarity", "Elasticity", "Exogeneity"], 0, "aligned"),
    ("A regression discontinuity design identifies a local effect by comparing observations where?", ["Just above and below the assignment cutoff", "Across countries", "Across decades", "At the sample mean only"], 0, "aligned"),
    ("What does a White test inspect in the residual variance of a regression?", ["Heteroskedasticity linked to the regressors", "Seasonality at month twelve", "Unit roots", "Outliers only"], 0, "aligned"),
    ("Seasonal adjustment of a quarterly series removes which component before estimation?", ["Systematic within-year variation", "The trend", "The mean", "The variance"], 0, "aligned"),
    ("An estimator is consistent when its distribution does what as the sample grows?", ["Concentrates on the true parameter", "Widens", "Becomes uniform", "Oscillates"], 0, "aligned"),
    ("Including an irrelevant regressor in a regression leaves the estimator unbiased but does what to its sampling variance?", ["Weakly increases it", "Sets it to zero", "Halves it", "Leaves it identical in all samples"], 0, "aligned"),
    ("The probability that a 95% confidence interval covers the true coefficient refers to what?", ["The long-run coverage rate of the interval procedure across samples", "This one interval's correctness", "The prior", "The p-value"], 0, "aligned"),
    ("A price-elasticity regression is consistent only when the price variance comes from shifts that are what with respect to the error distribution?", ["Exogenous", "Seasonal", "Large", "Negative"], 0, "aligned"),
    # 1 no-evidence: plainly phrased.
    ("A country exports more goods than it imports over a year. What is this situation usually called?", ["A trade surplus", "A trade war", "A budget year", "A gold rule"], 0, "no_evidence"),
]

CLINICAL = [
    ("Which vital change appears earliest in compensated hypovolemic shock?", ["Rising heart rate", "Falling heart rate", "Fever", "Jaundice"], 0),
    ("First-line emergency treatment for anaphylaxis is what?", ["Intramuscular epinephrine", "Oral antihistamine only", "Cold compress", "Observation"], 0),
    ("Crushing chest pain radiating to the left arm most suggests what?", ["Myocardial infarction", "Gastritis", "Costochondritis only", "Panic breathing"], 0),
    ("Which electrolyte disturbance classically follows prolonged vomiting?", ["Hypokalemic alkalosis", "Hyperkalemic acidosis", "Hypercalcemia", "Hypernatremia only"], 0),
    ("A positive Babinski sign in an adult indicates what?", ["Upper motor neuron lesion", "Normal reflex", "Peripheral neuropathy", "Muscle strain"], 0),
    ("The classic triad of fever, neck stiffness, and altered mental state suggests what?", ["Meningitis", "Migraine", "Tension headache", "Sinusitis"], 0),
    ("Which organ primarily clears lactate after exertion?", ["The liver", "The spleen", "The skin", "The bladder"], 0),
    ("Sudden unilateral facial droop sparing the forehead points to what?", ["Central facial nerve lesion", "Bell palsy", "Dental abscess", "Parotitis"], 0),
    ("What is the antidote for acetaminophen overdose?", ["N-acetylcysteine", "Naloxone", "Atropine", "Vitamin K"], 0),
    ("Polyuria, polydipsia, and weight loss in a teenager most suggest what?", ["Type 1 diabetes", "Hypothyroidism", "Anemia", "Appendicitis"], 0),
    ("Which sign distinguishes arterial from venous leg ulcers?", ["Punched-out borders with pale base", "Heavy exudate and brawny edema", "Location over the medial ankle", "Itching"], 0),
    ("A patient on long-term corticosteroids abruptly stops them. The main acute risk is what?", ["Adrenal crisis", "Thyroid storm", "Gout flare", "Tinnitus"], 0),
    ("Rebound tenderness at McBurney's point suggests what?", ["Appendicitis", "Cholecystitis", "Splenic rupture", "Cystitis"], 0),
    ("Which immunization is routinely advised for adults every ten years?", ["Tetanus-diphtheria booster", "Measles booster", "Polio booster", "BCG"], 0),
    ("Pitting edema, orthopnea, and an S3 gallop indicate what?", ["Congestive heart failure", "Asthma", "Pneumothorax", "Pericarditis only"], 0),
    ("What is the first step for a conscious adult with airway obstruction who can still cough?", ["Encourage coughing and monitor", "Immediate back blows", "Abdominal thrusts", "Finger sweep"], 0),
    ("Tall peaked T waves on an ECG suggest which abnormality?", ["Hyperkalemia", "Hypokalemia", "Hypocalcemia", "Anemia"], 0),
    ("Which drug class is contraindicated in asthma due to bronchospasm risk?", ["Non-selective beta blockers", "Inhaled steroids", "Leukotriene antagonists", "Muscarinic antagonists"], 0),
    ("Painless jaundice with a palpable gallbladder raises concern for what?", ["Pancreatic head tumor", "Gallstones", "Hepatitis A", "Gilbert syndrome"], 0),
    ("The most reliable early indicator of increased intracranial pressure is what?", ["Decreasing level of consciousness", "Pupil color", "Blood sugar", "Skin turgor"], 0),
    ("Which test confirms suspected deep vein thrombosis?", ["Compression ultrasound", "Chest radiograph", "Urinalysis", "Throat swab"], 0),
    ("Sudden pleuritic pain and breathlessness in a tall young smoker suggests what?", ["Spontaneous pneumothorax", "Lobar pneumonia", "Reflux", "Shingles"], 0),
    ("Which finding defines stage 2 hypertension in adults?", ["Blood pressure at or above 140/90", "Any reading above 110/70", "Pulse above 100", "Cholesterol above target"], 0),
    ("The initial fluid of choice for most adult resuscitation is what?", ["Isotonic crystalloid", "Hypotonic dextrose", "Albumin first", "Whole blood first"], 0),
    ("A wound infection emerging within 24 hours with crepitus suggests what organism?", ["Clostridium species", "Common skin flora only", "Candida", "Rhinovirus"], 0),
    ("Which sign suggests opioid toxicity?", ["Pinpoint pupils with respiratory depression", "Dilated pupils with fever", "Wheezing", "Hyperreflexia"], 0),
    ("Screening colonoscopy for average-risk adults typically begins at what age?", ["45", "25", "60", "70"], 0),
    ("Which condition presents with a 'bamboo spine' on imaging?", ["Ankylosing spondylitis", "Osteoarthritis", "Gout", "Fibromyalgia"], 0),
    ("An early sign of sepsis in the elderly is often what?", ["New confusion", "High fever always", "Localized rash", "Bradycardia always"], 0),
    ("Sudden painless monocular vision loss like a curtain suggests what?", ["Retinal artery occlusion or detachment", "Conjunctivitis", "Dry eye", "Stye"], 0),
]

GENETICS = [
    ("Two carriers of an autosomal recessive condition have children. What fraction of offspring is expected to be affected?", ["1/4", "1/2", "3/4", "All"], 0),
    ("Which inheritance pattern shows transmission only through the maternal line?", ["Mitochondrial", "Autosomal dominant", "X-linked recessive", "Y-linked"], 0),
    ("A karyotype showing trisomy 21 corresponds to which syndrome?", ["Down syndrome", "Turner syndrome", "Klinefelter syndrome", "Cri du chat"], 0),
    ("What is the term for one gene influencing multiple phenotypic traits?", ["Pleiotropy", "Epistasis", "Penetrance", "Anticipation"], 0),
    ("Reduced penetrance means what for carriers of a dominant mutation?", ["Some never show the phenotype", "All show it early", "The allele is lost", "The phenotype reverses"], 0),
    ("Which cross reveals whether a dominant-phenotype individual is homozygous?", ["A test cross with a recessive homozygote", "Selfing only", "A backcross to any parent", "Random mating"], 0),
    ("X-linked recessive conditions most commonly affect which group?", ["Males", "Females", "Both equally", "Neither"], 0),
    ("What process creates new allele combinations during meiosis?", ["Crossing over", "DNA repair", "Transcription", "Translation"], 0),
    ("A silent mutation changes the codon but not what?", ["The amino acid", "The chromosome", "The promoter", "The intron count"], 0),
    ("Anticipation, with earlier onset across generations, characterizes which mutation class?", ["Trinucleotide repeat expansions", "Missense changes", "Silent changes", "Balanced translocations"], 0),
    ("Which tool amplifies a specific DNA segment exponentially?", ["PCR", "Gel electrophoresis", "Western blot", "Karyotyping"], 0),
    ("45,X karyotype corresponds to which condition?", ["Turner syndrome", "Down syndrome", "Patau syndrome", "Fragile X"], 0),
    ("What is a frameshift mutation caused by?", ["Insertion or deletion not divisible by three", "Any point change", "Chromosome loss", "Histone binding"], 0),
    ("Uniparental disomy means a child inherited what?", ["Both chromosome copies from one parent", "No copies of a chromosome", "A viral gene", "Extra telomeres"], 0),
    ("Which condition results from imprinting loss on paternal 15q11?", ["Prader-Willi syndrome", "Angelman syndrome from the same event", "Marfan syndrome", "Cystic fibrosis"], 0),
    ("Heteroplasmy refers to variation in what?", ["Mitochondrial genome copies within a cell", "Nuclear introns", "Ribosome count", "Histone marks"], 0),
    ("The probability two siblings share both parental alleles at a locus is what?", ["1/4", "1/2", "1", "1/8"], 0),
    ("Which syndrome involves tall stature and 47,XXY karyotype?", ["Klinefelter syndrome", "Turner syndrome", "Down syndrome", "Williams syndrome"], 0),
    ("Consanguinity raises the risk of which inheritance class most?", ["Autosomal recessive disorders", "Dominant disorders", "Mitochondrial disorders", "Somatic mosaicism"], 0),
    ("A Robertsonian translocation joins what?", ["Two acrocentric chromosome long arms", "Two telomeres", "Sister chromatids", "Histones"], 0),
    ("Which testing examines fetal DNA fragments in maternal blood?", ["Non-invasive prenatal testing", "Amniocentesis", "Chorionic villus sampling", "Cordocentesis"], 0),
    ("Codominance is illustrated by which human system?", ["ABO blood groups showing AB", "Eye color", "Height", "Fingerprints"], 0),
    ("What does a pedigree with affected individuals in every generation suggest?", ["Autosomal dominant inheritance", "Recessive inheritance", "Mitochondrial inheritance", "De novo only"], 0),
    ("Mosaicism arises from mutation occurring when?", ["After fertilization in some cell lines", "In both gametes", "Only in sperm", "Before meiosis in all cells"], 0),
    ("BRCA1 pathogenic variants raise risk primarily for which cancers?", ["Breast and ovarian", "Lung and liver", "Skin only", "Thyroid only"], 0),
    ("A nonsense mutation introduces what into the coding sequence?", ["A premature stop codon", "An extra exon", "A new promoter", "A silent change"], 0),
    ("Which law explains independent assortment of alleles at unlinked loci?", ["Mendel's second law", "Hardy's rule", "Chargaff's rule", "The central dogma"], 0),
    ("Genetic linkage between two loci is stronger when they are what?", ["Closer together on a chromosome", "On different chromosomes", "Both recessive", "Highly expressed"], 0),
    ("What is the expected carrier frequency for an autosomal recessive disease affecting 1 in 10,000?", ["About 1 in 50", "About 1 in 10,000", "About 1 in 2", "About 1 in 1,000,000"], 0),
    ("Which structure caps chromosome ends and shortens with cell divisions?", ["Telomere", "Centromere", "Spindle", "Nucleolus"], 0),
]

LAW = [
    ("Which element is NOT required for common-law negligence?", ["Intent to harm", "Duty of care", "Breach", "Causation"], 0),
    ("A binding contract generally requires offer, acceptance, and what else?", ["Consideration", "A notary", "Witnesses", "Payment in advance"], 0),
    ("The burden of proof in a criminal trial rests on whom?", ["The prosecution", "The defendant", "The judge", "The jury"], 0),
    ("What does stare decisis require courts to do?", ["Follow applicable precedent", "Ignore prior rulings", "Defer to legislators always", "Seat larger juries"], 0),
    ("Which court filing starts a civil lawsuit?", ["A complaint", "A subpoena", "A verdict form", "An injunction"], 0),
    ("A misdemeanor differs from a felony primarily by what?", ["Severity of the authorized punishment", "The courtroom used", "The judge's title", "The filing fee"], 0),
    ("Hearsay is generally excluded because the declarant was not what?", ["Subject to cross-examination", "Paid", "Recorded", "A lawyer"], 0),
    ("What does an injunction order a party to do?", ["Act or refrain from acting", "Pay damages only", "Appear on television", "Change counsel"], 0),
    ("Double jeopardy protects against what?", ["Retrial for the same offense after acquittal", "High bail", "Long sentences", "Civil liability"], 0),
    ("Which tort covers false statements damaging reputation in writing?", ["Libel", "Slander", "Battery", "Conversion"], 0),
    ("An appellate court primarily reviews what?", ["Legal errors in the record below", "New witness testimony", "Jury selection quotas", "Sentencing preferences"], 0),
    ("What makes a contract voidable for duress?", ["Improper threats leaving no reasonable alternative", "Any hard bargaining", "Low price", "Oral form"], 0),
    ("The statute of limitations does what?", ["Bars claims filed after a time limit", "Sets maximum damages", "Requires arbitration", "Licenses attorneys"], 0),
    ("Strict liability in tort applies most classically to what?", ["Abnormally dangerous activities", "All car accidents", "Breach of contract", "Defamation"], 0),
    ("Which remedy compels performance of a unique contractual promise?", ["Specific performance", "Nominal damages", "Restitution only", "Punitive damages"], 0),
    ("A subpoena duces tecum requires what?", ["Producing documents or records", "Personal testimony only", "Posting bail", "Jury service"], 0),
    ("Consideration in contract law means what?", ["A bargained-for exchange of value", "A written seal", "Fair market price", "Mutual friendship"], 0),
    ("Which doctrine holds employers liable for employees' torts within the scope of employment?", ["Respondeat superior", "Caveat emptor", "Res judicata", "In loco parentis"], 0),
    ("Probable cause is the standard for what?", ["Issuing a search or arrest warrant", "Civil judgments", "Contract formation", "Jury verdicts"], 0),
    ("What does res judicata prevent?", ["Relitigating a final judgment between the same parties", "New evidence", "Appeals", "Settlement"], 0),
    ("An easement grants what?", ["A right to use another's land for a purpose", "Ownership of the land", "Mineral title", "A lease"], 0),
    ("Which mental state is required for common-law murder?", ["Malice aforethought", "Mere negligence", "Strict liability", "Recklessness as to property"], 0),
    ("The parol evidence rule limits what?", ["Using prior statements to vary a complete written contract", "Expert testimony", "Jury instructions", "Cross-examination"], 0),
    ("A plaintiff who is 30% at fault in a comparative negligence state recovers what?", ["70% of proven damages", "Nothing", "All damages", "Double damages"], 0),
    ("Which right does Miranda protect during custodial interrogation?", ["Against compelled self-incrimination", "To speedy appeal", "To bail", "To a phone book"], 0),
    ("What converts an offer's acceptance into a counteroffer at common law?", ["Varying the offer's terms", "Prompt reply", "Silence", "A handshake"], 0),
    ("Which business form shields owners from personal liability by default?", ["A corporation", "A sole proprietorship", "A general partnership", "A handshake venture"], 0),
    ("Burden-shifting in discrimination claims begins with whose prima facie case?", ["The plaintiff employee", "The employer", "The court", "The union"], 0),
    ("What is voir dire?", ["Questioning prospective jurors", "Closing argument", "Sentencing", "An appeal brief"], 0),
    ("Adverse possession requires possession that is open, continuous, hostile, and what else?", ["Exclusive for the statutory period", "Paid", "Permitted", "Recorded"], 0),
]

PHILOSOPHY = [
    ("Which branch of philosophy studies the nature and limits of knowledge?", ["Epistemology", "Aesthetics", "Political theory", "Philology"], 0),
    ("Kant's categorical imperative asks whether a maxim could be what?", ["Willed as a universal law", "Profitable", "Popular", "Traditional"], 0),
    ("Utilitarianism evaluates actions by what standard?", ["Their consequences for overall welfare", "Their conformity to duty", "The agent's character alone", "Divine command"], 0),
    ("The mind-body problem concerns the relation between what?", ["Mental states and physical states", "Ethics and politics", "Language and culture", "Time and space"], 0),
    ("Descartes' cogito argument is meant to establish what?", ["The certainty of one's own existence as a thinking thing", "The existence of matter", "The reliability of the senses", "The immortality of animals"], 0),
    ("Empiricism holds that knowledge derives primarily from what?", ["Sense experience", "Innate ideas", "Pure reason alone", "Authority"], 0),
    ("What is the is-ought problem?", ["Deriving prescriptions from purely descriptive facts", "Confusing past and future", "Mixing genres", "Defining art"], 0),
    ("Plato's theory of forms claims that particulars are what?", ["Imperfect copies of eternal universals", "Self-sufficient", "Illusions with no source", "Atoms in motion"], 0),
    ("Which position denies that moral claims can be true or false?", ["Non-cognitivism", "Moral realism", "Virtue theory", "Contractualism"], 0),
    ("The trolley problem probes the distinction between what?", ["Doing and allowing harm", "Truth and beauty", "Mind and language", "Faith and reason"], 0),
    ("Hume's problem of induction questions our justification for what?", ["Expecting the future to resemble the past", "Using deduction", "Trusting mathematics", "Doubting testimony"], 0),
    ("Existentialism emphasizes which theme?", ["Freedom and responsibility in creating meaning", "Natural teleology", "Linguistic analysis", "Economic base"], 0),
    ("A valid deductive argument with true premises is called what?", ["Sound", "Strong", "Cogent", "Persuasive"], 0),
    ("Aristotle located moral virtue in what?", ["A mean between extremes of character", "Maximizing pleasure", "Obedience to law", "Ascetic denial"], 0),
    ("Phenomenalism analyzes physical objects in terms of what?", ["Actual and possible sense experiences", "Divine ideas", "Social contracts", "Market values"], 0),
    ("What does dualism claim about mind and matter?", ["They are distinct kinds of substance or property", "They are identical", "Neither exists", "Only matter exists"], 0),
    ("Rawls' veil of ignorance is a device for choosing what?", ["Principles of justice without knowing one's social position", "Personal careers", "Religious doctrine", "Artistic taste"], 0),
    ("The Gettier cases challenge which analysis of knowledge?", ["Justified true belief", "Reliabilism", "Skepticism", "Coherentism"], 0),
    ("Nietzsche's critique of morality targets what he called what?", ["Slave morality", "Virtue ethics", "Natural law", "Utilitarian calculus"], 0),
    ("Compatibilism reconciles free will with what?", ["Determinism", "Dualism", "Idealism", "Anarchism"], 0),
    ("Which fallacy concludes a claim is false because its source is disreputable?", ["Ad hominem", "Straw man", "Equivocation", "Begging the question"], 0),
    ("Ockham's razor counsels what?", ["Not multiplying entities beyond necessity", "Maximizing assumptions", "Trusting tradition", "Preferring complexity"], 0),
    ("Phenomenology, as founded by Husserl, studies what?", ["Structures of conscious experience", "Brain chemistry", "Social statistics", "Legal codes"], 0),
    ("Moral relativism claims that moral truth is what?", ["Dependent on cultural or individual frameworks", "Universal", "Innate", "Impossible"], 0),
    ("What is the naturalistic fallacy according to Moore?", ["Defining goodness in purely natural terms", "Trusting science", "Denying evolution", "Preferring cities"], 0),
    ("The ship of Theseus raises questions about what?", ["Identity through change of parts", "Maritime ethics", "Aesthetic value", "Travel time"], 0),
    ("A priori knowledge is knowledge that is what?", ["Justifiable independently of experience", "Learned in childhood", "Derived from experiment", "Merely probable"], 0),
    ("Deontology judges actions primarily by what?", ["Conformity to duty or rule", "Outcomes alone", "The agent's emotions", "Social approval"], 0),
    ("Skepticism about the external world was dramatized by Descartes using what device?", ["An all-powerful deceiver", "A social contract", "A golden mountain", "A round square"], 0),
    ("What does aesthetics study?", ["The nature of beauty and art", "The nature of duty", "Scientific method", "Political power"], 0),
]

HISTORY = [
    ("The Treaty of Versailles in 1919 formally ended which conflict?", ["The First World War", "The Napoleonic Wars", "The Crimean War", "The Thirty Years War"], 0),
    ("The Reformation began in 1517 with whose Ninety-five Theses?", ["Martin Luther", "John Calvin", "Erasmus", "Thomas More"], 0),
    ("Which event in 1789 marked the start of the French Revolution?", ["The storming of the Bastille", "The Congress of Vienna", "The Tennis Court coronation", "The Paris Commune"], 0),
    ("The Congress of Vienna in 1815 aimed to do what?", ["Restore a balance of power after Napoleon", "Unify Germany", "Partition Africa", "Create the League of Nations"], 0),
    ("Which empire was ruled from Constantinople until 1453?", ["The Byzantine Empire", "The Holy Roman Empire", "The Carolingian Empire", "The Ottoman Empire"], 0),
    ("The Renaissance began in which region?", ["Northern Italy", "Scandinavia", "Iberia", "The Baltics"], 0),
    ("Which monarch's reign is associated with England's 'Glorious Revolution' of 1688?", ["William of Orange replacing James II", "Henry VIII", "Elizabeth I", "George III"], 0),
    ("The Hanseatic League was primarily what?", ["A commercial alliance of northern trading cities", "A crusading order", "A dynastic union", "A religious council"], 0),
    ("Napoleon's invasion of which country in 1812 crippled his Grand Army?", ["Russia", "Spain", "Egypt", "Austria"], 0),
    ("The Enlightenment emphasized what as the basis of authority?", ["Reason", "Revelation", "Custom", "Conquest"], 0),
    ("Which 1648 settlement ended the Thirty Years War?", ["The Peace of Westphalia", "The Edict of Nantes", "The Treaty of Utrecht", "The Concordat of Worms"], 0),
    ("The first crusade was launched in 1095 by which pope's call?", ["Urban II", "Gregory VII", "Innocent III", "Leo X"], 0),
    ("Which revolution of 1688-1689 established parliamentary supremacy in England?", ["The Glorious Revolution", "The Puritan uprising", "The Chartist movement", "The Restoration"], 0),
    ("Bismarck unified Germany primarily through what means?", ["Wars and diplomacy engineered from Prussia", "Popular referenda", "Colonial ventures", "Church councils"], 0),
    ("The Black Death reached Europe in which decade?", ["1340s", "1240s", "1440s", "1540s"], 0),
    ("Which city-state dominated Mediterranean trade in the late medieval period?", ["Venice", "Lisbon", "Hamburg", "Krakow"], 0),
    ("The Edict of Nantes in 1598 granted what?", ["Toleration to French Protestants", "Free trade with Spain", "Land to the peasantry", "Independence to the Netherlands"], 0),
    ("Tsar Alexander II is best remembered for what reform?", ["Emancipating the serfs in 1861", "Building the Winter Palace", "Founding St Petersburg", "Creating the Duma"], 0),
    ("The Industrial Revolution began in which country?", ["Britain", "France", "Prussia", "Italy"], 0),
    ("The 1914 assassination that triggered general war occurred in which city?", ["Sarajevo", "Vienna", "Belgrade", "Munich"], 0),
    ("Feudal obligations bound vassals to lords primarily through what?", ["Land tenure in exchange for service", "Wage contracts", "Religious vows", "Citizenship"], 0),
    ("Which dynasty ruled France from 987 until the Revolution's interruption?", ["The Capetians and their branches", "The Habsburgs", "The Hohenzollerns", "The Romanovs"], 0),
    ("The Spanish Armada was defeated in which year?", ["1588", "1492", "1618", "1701"], 0),
    ("The Weimar Republic suffered hyperinflation peaking in which year?", ["1923", "1918", "1933", "1929"], 0),
    ("Which agreement divided the non-European world between Spain and Portugal in 1494?", ["The Treaty of Tordesillas", "The Peace of Augsburg", "The Treaty of Cateau-Cambresis", "The Truce of Antwerp"], 0),
    ("The February and October events of 1917 transformed which empire?", ["Russia", "Austria-Hungary", "Germany", "The Ottomans"], 0),
    ("Which plague-era institution regulated quarantine in Venetian ports?", ["The lazaretto system", "The guild courts", "The tithe office", "The admiralty"], 0),
    ("The Magna Carta of 1215 limited whose power?", ["King John of England", "Philip II of France", "Frederick II", "The papacy"], 0),
    ("Which conference partitioned Africa among European powers in 1884-85?", ["The Berlin Conference", "The Vienna Congress", "The Hague Convention", "The Paris Peace"], 0),
    ("The armistice ending the First World War took effect in which month of 1918?", ["November", "January", "June", "March"], 0),
]

BANKS = {
    "machine_learning": ML,
    "college_computer_science": CS,
    "professional_psychology": PSYCH,
    "formal_logic": LOGIC,
    "econometrics": ECON,
    "clinical_knowledge": CLINICAL,
    "medical_genetics": GENETICS,
    "professional_law": LAW,
    "philosophy": PHILOSOPHY,
    "european_history": HISTORY,
}

PERSONAS = {
    "personas": [
        {
            "role": "management_consultant",
            "zones": {
                "strong_zone": [
                    "Draft a market-entry assessment framework for a mid-size logistics client.",
                    "Outline a workshop agenda for aligning executives on a cost program.",
                    "Structure a competitor benchmarking study for a retail chain.",
                ],
                "risk_zone": [
                    "Estimate the discounted cash flow impact of a pension accounting change.",
                    "Advise on the antitrust exposure of a proposed distribution agreement.",
                    "Recommend a clinical trial portfolio strategy for a pharma client.",
                ],
                "outside_zone": [
                    "Interpret a histopathology report for a suspected carcinoma.",
                    "Design the load-bearing schema for a suspension bridge retrofit.",
                    "Evaluate a quantum error-correction code proposal.",
                ],
            },
        },
        {
            "role": "corporate_lawyer",
            "zones": {
                "strong_zone": [
                    "Review an indemnification clause in a services master agreement.",
                    "Summarize disclosure obligations for a private placement memorandum.",
                    "Draft a non-solicitation provision enforceable in most jurisdictions.",
                ],
                "risk_zone": [
                    "Assess the tax efficiency of a cross-border holding structure.",
                    "Advise on cybersecurity certification requirements for a medical device.",
                    "Evaluate an actuarial model underlying a pension settlement.",
                ],
                "outside_zone": [
                    "Recommend a chemotherapy regimen adjustment for an elderly patient.",
                    "Debug a distributed consensus protocol implementation.",
                    "Design a seismic retrofit plan for a masonry structure.",
                ],
            },
        },
        {
            "role": "nlp_ml_researcher",
            "zones": {
                "strong_zone": [
                    "Critique an ablation study design for a retrieval-augmented model.",
                    "Propose an evaluation suite for long-context summarization.",
                    "Review a training-stability analysis for a mixture-of-experts model.",
                ],
                "risk_zone": [
                    "Advise on the clinical deployment readiness of a triage chatbot.",
                    "Assess the legal defensibility of a dataset licensing strategy.",
                    "Recommend a psychometric validation plan for a survey instrument.",
                ],
                "outside_zone": [
                    "Interpret an echocardiogram for valve regurgitation severity.",
                    "Draft a merger filing for antitrust review.",
                    "Plan a Phase III oncology trial's interim analysis schedule.",
                ],
            },
        },
    ]
}


def main():
    strong, off = load_vocab()
    OUT.mkdir(parents=True, exist_ok=True)
    problems = []
    for subject, bank in BANKS.items():
        if len(bank) != 30:
            problems.append(f"{subject}: expected 30 items, have {len(bank)}")
            continue
        lines = []
        for idx, entry in enumerate(bank, start=1):
            q, choices, answer = entry[0], entry[1], entry[2]
            intended = entry[3] if len(entry) > 3 else None
            item_id = f"{PREFIX[subject]}_{idx:03d}"
            prompt = q + "".join(
                f"\n{letter}) {choice}" for letter, choice in zip("ABCD", choices)
            )
            if intended is not None:
                got = alignment_class(strong, off, prompt)
                if got != intended:
                    problems.append(f"{item_id}: intended {intended}, scored {got}")
            lines.append(
                json.dumps(
                    {
                        "id": item_id,
                        "subject": subject,
                        "question": q,
                        "choices": choices,
                        "answer_index": answer,
                    },
                    ensure_ascii=False,
                )
            )
        (OUT / f"{subject}.jsonl").write_text("\n".join(lines) + "\n")
    (ROOT / "data" / "pdd-scenarios.json").write_text(
        json.dumps(PERSONAS, indent=2, ensure_ascii=False) + "\n"
    )
    if problems:
        print("FAILED:")
        for p in problems:
            print(" ", p)
        sys.exit(1)
    print(f"wrote {len(BANKS)} corpus files to {OUT} and data/pdd-scenarios.json")


if __name__ == "__main__":
    main()
