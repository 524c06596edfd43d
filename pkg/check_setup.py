#!/usr/bin/env python3
"""
check_setup.py
──────────────
Quick diagnostic script to verify the vsmsim setup.
Run with: python check_setup.py
"""

import importlib
import sys
from pathlib import Path

REQUIRED = [
    ("numpy", "NumPy"),
    ("scipy", "SciPy"),
    ("pandas", "pandas"),
    ("pydantic", "Pydantic"),
    ("pydantic_settings", "pydantic-settings"),
    ("dotenv", "python-dotenv"),
    ("pytest", "pytest"),
]


def c(text: str, color: str) -> str:
    """Colorize text for terminal."""
    colors = {
        "green": "\033[92m",
        "red": "\033[91m",
        "yellow": "\033[93m",
        "blue": "\033[94m",
        "cyan": "\033[96m",
        "reset": "\033[0m",
        "bold": "\033[1m"
    }
    return f"{colors.get(color, '')}{text}{colors['reset']}"


def check_python():
    """Check Python version."""
    version = sys.version_info
    if version.major >= 3 and version.minor >= 10:
        print(f"  {c('✓', 'green')} Python {version.major}.{version.minor}.{version.micro}")
        return True
    print(f"  {c('✗', 'red')} Python {version.major}.{version.minor} (need 3.10+)")
    return False


def check_dependencies():
    """Check Python dependencies."""
    ok = True
    for module, label in REQUIRED:
        try:
            mod = importlib.import_module(module)
            version = getattr(mod, "__version__", "")
            print(f"  {c('✓', 'green')} {label} {version}".rstrip())
        except ImportError:
            print(f"  {c('✗', 'red')} {label} not installed")
            ok = False
    return ok


def check_env():
    """Report VSMSIM_ overrides in .env, if any."""
    env_path = Path(".env")
    if not env_path.exists():
        print(f"  {c('✓', 'green')} no .env file, built-in defaults apply")
        return True
    keys = [line.split("=", 1)[0].strip() for line in env_path.read_text().splitlines()
            if line.strip().startswith("VSMSIM_")]
    print(f"  {c('✓', 'green')} .env file exists ({len(keys)} VSMSIM_ setting(s))")
    for key in keys:
        print(f"      • {c(key, 'cyan')}")
    return True


def check_smoke():
    """Reference-case energy and bandwidth numbers from the installed package."""
    try:
        from vsmsim.analysis import energy_report, estimate_bandwidths
        from vsmsim.model.profiles import REFERENCE_ESS, REFERENCE_SG, REFERENCE_VSM
    except Exception as e:
        print(f"  {c('✗', 'red')} vsmsim import failed: {e}")
        return False

    energy = energy_report(REFERENCE_SG, REFERENCE_VSM, REFERENCE_ESS, 0.375)
    bw = estimate_bandwidths(REFERENCE_SG, REFERENCE_VSM, REFERENCE_ESS)
    ok = abs(energy.delta_e_vsm - 1.875) < 1e-12 and abs(bw.secondary - 0.125) < 1e-12
    mark = c('✓', 'green') if ok else c('✗', 'red')
    print(f"  {mark} ΔE_VSM = {energy.delta_e_vsm:.4f} p.u.·s, ΔSoC = {energy.delta_soc:.4f}")
    print(f"  {mark} bandwidths = {bw.primary:.4f} / {bw.secondary:.4f} / {bw.soc:.5f} rad/s")
    return ok


def main():
    print()
    print(c("═" * 50, "blue"))
    print(c("  VSMSIM SETUP CHECK", "bold"))
    print(c("═" * 50, "blue"))
    print()

    all_ok = True

    print(c("[ Python ]", "cyan"))
    if not check_python():
        all_ok = False
    print()

    print(c("[ Dependencies ]", "cyan"))
    deps_ok = check_dependencies()
    if not deps_ok:
        all_ok = False
        print(f"      Run: pip install -r requirements.txt")
    print()

    print(c("[ Configuration ]", "cyan"))
    check_env()
    print()

    if deps_ok:
        print(c("[ Reference-case smoke test ]", "cyan"))
        if not check_smoke():
            all_ok = False
        print()

    print(c("═" * 50, "blue"))
    if all_ok:
        print(c("  ✓ All systems ready! Run: python main.py cases -o out/", "green"))
    else:
        print(c("  ✗ Setup issues found. See above for fixes.", "red"))
    print(c("═" * 50, "blue"))
    print()
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
