/** UI-side session state: mirrors the server's click list and mask.
 *
 * One API call per user click; responses carry sequence numbers so a reply
 * that was superseded by a newer action is discarded instead of applied.
 * Undo always re-fetches the server's recomputed mask, never predicts it.
 */

import { SessionApi, type ClickLabel, type ClickRecord, type MaskPayload } from "./api";
import { decodeRle } from "./rle";

export interface OverlayState {
  mask: Uint8Array;
  trueCount: number;
  voxelCount: number;
  clicks: ClickRecord[];
  iou?: number;
  notice?: string;
}

export class SessionController {
  private sessionId: string | null = null;
  private nPoints = 0;
  private appliedSequence = -1;
  private listeners: Array<(state: OverlayState) => void> = [];
  state: OverlayState = { mask: new Uint8Array(0), trueCount: 0, voxelCount: 0, clicks: [] };

  constructor(private api: SessionApi) {}

  onChange(listener: (state: OverlayState) => void): void {
    this.listeners.push(listener);
  }

  async start(sceneId: string, modelId?: string, instanceId?: number): Promise<void> {
    const info = await this.api.createSession(sceneId, modelId, instanceId);
    this.sessionId = info.session_id;
    this.nPoints = info.n_points;
    this.appliedSequence = -1;
    this.apply({
      session_id: info.session_id,
      mask_rle: [],
      mask_true_count: 0,
      voxel_count: 0,
      n_points: info.n_points,
      clicks: [],
      sequence: 0,
    });
  }

  get id(): string {
    if (this.sessionId === null) throw new Error("no active session");
    return this.sessionId;
  }

  async addClick(x: number, y: number, z: number, label: ClickLabel): Promise<OverlayState> {
    const payload = await this.api.addClick(this.id, x, y, z, label);
    this.apply(payload);
    return this.state;
  }

  async undo(): Promise<OverlayState> {
    const payload = await this.api.undo(this.id);
    this.apply(payload, true);
    return this.state;
  }

  /** Confirm the UI click list matches the server session (sync check). */
  async verifySync(): Promise<boolean> {
    const payload = await this.api.sessionState(this.id);
    const server = JSON.stringify(payload.clicks);
    const local = JSON.stringify(this.state.clicks);
    return server === local;
  }

  private apply(payload: MaskPayload, force = false): void {
    if (!force && payload.sequence < this.appliedSequence) return; // stale response
    this.appliedSequence = payload.sequence;
    this.state = {
      mask: decodeRle(payload.mask_rle, payload.n_points || this.nPoints),
      trueCount: payload.mask_true_count,
      voxelCount: payload.voxel_count,
      clicks: payload.clicks,
      iou: payload.iou,
      notice: payload.notice,
    };
    for (const listener of this.listeners) listener(this.state);
  }
}
