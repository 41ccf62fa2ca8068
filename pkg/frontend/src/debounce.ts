export interface Debounced {
  /** Schedule a trailing-edge run, restarting the quiet-period timer. */
  schedule(): void;
  /** Drop any pending run. */
  cancel(): void;
  /** Run a pending call immediately, if one is scheduled. */
  flush(): void;
}

/**
 * Trailing-edge debounce: fn runs once the calls have been quiet for ms.
 * A burst of schedule() calls therefore collapses into a single run.
 */
export function debounce(fn: () => void, ms: number): Debounced {
  let timer: ReturnType<typeof setTimeout> | null = null;

  const cancel = () => {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
    }
  };

  return {
    schedule() {
      cancel();
      timer = setTimeout(() => {
        timer = null;
        fn();
      }, ms);
    },
    cancel,
    flush() {
      if (timer !== null) {
        cancel();
        fn();
      }
    },
  };
}
