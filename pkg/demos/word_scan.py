# Which length-n words are easiest and hardest to M-embed?
#
# For small n we can enumerate every source word v and every target word y
# of length Mn and compute the exact embedding probability.  The scan below
# confirms the expected ranking: the alternating word wins, the constant
# words lose, and complements tie.

from clairvoyant import extremal_scan, moment_report

n, M = 8, 2
report = extremal_scan(n, M)

print("all %d words of length %d, M = %d" % (len(report.table), n, M))
print()
print("best  %s  with probability %s" %
      (" ".join(str(w) for w in report.best_words), report.best_probability))
print("worst %s  with probability %s" %
      (" ".join(str(w) for w in report.worst_words), report.worst_probability))
print()

# top and bottom of the full ranking (complement pairs share a row)
ranked = sorted(report.table, key=lambda t: t[1], reverse=True)
print("rank  word      probability")
for i, (w, prob) in enumerate(ranked[:5]):
    print("%4d  %s  %-12s ~ %.6f" % (i + 1, w, prob, float(prob)))
print(" ...")
for i, (w, prob) in enumerate(ranked[-5:], start=len(ranked) - 4):
    print("%4d  %s  %-12s ~ %.6f" % (i, w, prob, float(prob)))
print()

# every word ties with its complement: swapping 0s and 1s everywhere is a
# bijection on the target space
by_word = dict(report.table)
assert all(by_word[w.complement()] == prob for w, prob in report.table)
print("complement symmetry holds across the table")
print()

# averaged over a random source word the embedding count has mean (M/2)^n,
# and the second moment ratio E[Z^2]/E[Z]^2 grows geometrically, which is
# why a plain second-moment argument cannot settle the M = 2 case
print(" n   mean       E[Z^2]/E[Z]^2")
for k in range(1, 9):
    mom = moment_report(k, M)
    print("%2d   %-8s   %s ~ %.4f" % (k, mom.mean, mom.second_moment_ratio,
                                      float(mom.second_moment_ratio)))
