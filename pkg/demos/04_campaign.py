"""The full paired campaign: ten randomized trials, three controllers.

All three controller modes fly the identical ten initial states with
shared detector noise seeds, so per-trial differences are attributable to
the controller. The NEAR-only controller loses tracking in every trial
that starts at 110 m; the FAR-only controller lands everywhere but
scatters; the dual-expert controller keeps the best of both. The exact
paired Wilcoxon test quantifies the comparison.
"""

from padland import Mode, Scenario, TrialConfig, compare_modes, format_comparison_table, run_campaign

campaign = run_campaign(Scenario(), TrialConfig(seed=42))

print("per-trial outcomes (z0 -> reason, error):")
for mode in (Mode.NEAR_ONLY, Mode.FAR_ONLY, Mode.DUAL):
    cells = []
    for t in campaign.results(mode):
        cells.append(f"{t.initial_position[2]:.0f}m:{t.termination_reason.value[:4]}/{t.touchdown_error:5.2f}")
    print(f"  {mode.value:<10} " + "  ".join(cells))

print()
report = compare_modes({m: campaign.results(m) for m in campaign.runs})
print(format_comparison_table(report))

print()
print("the dual controller's per-trial expert mix:")
for t in campaign.results(Mode.DUAL):
    total = t.expert_usage["FAR"] + t.expert_usage["NEAR"]
    far_frac = t.expert_usage["FAR"] / total
    print(f"  trial {t.trial_id} (z0 = {t.initial_position[2]:>5.0f} m): "
          f"FAR {far_frac:5.1%} of {total} frames")
