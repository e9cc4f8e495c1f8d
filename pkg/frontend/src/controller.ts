import { ApiClient, PresetCatalog } from "./api.js";
import {
  SessionState,
  freshSession,
  pushMutation,
  undo as undoState,
} from "./state.js";
import { QuiverJson } from "./types.js";

/** Info panel contents; each field carries either a value or an error chip. */
export interface InfoPanel {
  period?: number | null;
  periodError?: string;
  formula?: string;
  formulaError?: string;
  decomposition?: string;
  decompositionError?: string;
  terms?: string[];
  termsError?: string;
}

const TERM_COUNT = 12;

/** DOM-free orchestration: holds the session, talks to the service, and
 * notifies a listener after every visible change.  Mutations are serialised
 * client-side; rapid clicks queue and run one at a time. */
export class ExplorerController {
  state: SessionState | null = null;
  info: InfoPanel = {};
  banner: string | null = null;
  catalog: PresetCatalog | null = null;

  private mutationQueue: number[] = [];
  private mutationInFlight = false;
  private infoEpoch = 0;

  constructor(
    private api: ApiClient,
    private onChange: () => void = () => {},
  ) {}

  async loadCatalog(): Promise<PresetCatalog> {
    if (!this.catalog) {
      this.catalog = await this.api.presets();
    }
    return this.catalog;
  }

  async loadPreset(name: string): Promise<void> {
    const catalog = await this.loadCatalog();
    const matrix = catalog.quivers[name];
    if (!matrix) throw new Error(`unknown preset ${name}`);
    this.state = freshSession(name, matrix);
    this.banner = null;
    this.onChange();
    await this.refreshInfo();
  }

  loadMatrix(matrix: QuiverJson): Promise<void> {
    this.state = freshSession(null, matrix);
    this.banner = null;
    this.onChange();
    return this.refreshInfo();
  }

  /** Queue a click on vertex k (1-based); resolves when the queue drains. */
  clickVertex(k: number): Promise<void> {
    this.mutationQueue.push(k);
    return this.drainMutations();
  }

  private async drainMutations(): Promise<void> {
    if (this.mutationInFlight) return;
    this.mutationInFlight = true;
    try {
      while (this.mutationQueue.length > 0) {
        const k = this.mutationQueue.shift()!;
        if (!this.state) continue;
        try {
          const mutated = await this.api.mutate(this.state.current, k);
          this.state = pushMutation(this.state, k, mutated);
          this.banner = null;
          this.onChange();
        } catch (err) {
          this.banner = `mutation failed: ${(err as Error).message}`;
          this.onChange();
        }
      }
    } finally {
      this.mutationInFlight = false;
    }
    await this.refreshInfo();
  }

  undo(): Promise<void> {
    if (!this.state) return Promise.resolve();
    this.state = undoState(this.state);
    this.onChange();
    return this.refreshInfo();
  }

  /** Re-query the four info endpoints for the current matrix; stale
   * responses (from an older matrix) are dropped. */
  async refreshInfo(): Promise<void> {
    if (!this.state) return;
    const epoch = ++this.infoEpoch;
    const b = this.state.current;
    const next: InfoPanel = {};
    const tasks: Promise<void>[] = [
      this.api.period(b).then(
        (p) => void (next.period = p),
        (err) => void (next.periodError = (err as Error).message),
      ),
      this.api.recurrence(b).then(
        (r) => void (next.formula = r.formula),
        (err) => void (next.formulaError = (err as Error).message),
      ),
      this.api.decompose(b).then(
        (report) => void (next.decomposition = report),
        (err) => void (next.decompositionError = (err as Error).message),
      ),
      this.api.sequence(b, TERM_COUNT).then(
        (terms) => void (next.terms = terms),
        (err) => void (next.termsError = (err as Error).message),
      ),
    ];
    await Promise.all(tasks);
    if (epoch === this.infoEpoch) {
      this.info = next;
      this.onChange();
    }
  }
}
